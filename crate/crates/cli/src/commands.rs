use kminv::cartan::Kind;
use kminv::invariants::{
    bilinear_form, check_divisibility_lemma, invariance_check_eq1, invariant_space, is_invariant,
    verify_layer_recurrences, verify_main_theorem, InvariantError,
};
use kminv::polyring::{monomials_of_degree, rational};
use kminv::subalgebra::{check_c1_c2, subalgebra_cartan};
use kminv::topology::{cohomology_presentation, flag_poincare, homotopy_report, TopologyError};
use kminv::{CartanMatrix, WeightPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{CliError, Code};

pub struct Output {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

fn kind_name(a: &CartanMatrix) -> String {
    match a.classify().kind() {
        Some(k) => k.to_string(),
        None => "Decomposable".into(),
    }
}

pub fn classify(a: &CartanMatrix) -> Output {
    let t = a.classify();
    let blocks: Vec<Vec<usize>> = t.blocks.iter().map(|b| b.indices.iter().map(|i| i + 1).collect()).collect();
    let json = match t.kind() {
        Some(k) => json!({ "type": k.to_string(), "blocks": blocks }),
        None => json!({
            "type": "Decomposable",
            "blocks": blocks,
            "block_types": t.blocks.iter().map(|b| b.kind.to_string()).collect::<Vec<_>>(),
        }),
    };
    let mut text = format!("type: {}\n", kind_name(a));
    for (b, idx) in t.blocks.iter().zip(&blocks) {
        text += &format!("block {idx:?}: {}\n", b.kind);
    }
    Output::ok(json, text)
}

pub fn symmetrize(a: &CartanMatrix) -> Output {
    let s = a.symmetrize();
    let d: Option<Vec<String>> = s.d.as_ref().map(|d| d.iter().map(ToString::to_string).collect());
    let text = match &d {
        Some(d) => format!("symmetrizable: yes\nd = ({})\n", d.join(", ")),
        None => "symmetrizable: no\n".into(),
    };
    Output::ok(json!({ "symmetrizable": d.is_some(), "d": d }), text)
}

pub fn invariants(a: &CartanMatrix, max_degree: u32) -> Result<Output, CliError> {
    let mut degrees = Vec::new();
    let mut text = String::new();
    for l in 0..=max_degree {
        let space = invariant_space(a, l);
        let ascii: Vec<String> = space.basis.iter().map(WeightPolynomial::to_ascii).collect();
        text += &format!("I^{l}: dim {}\n", space.dim());
        for p in &ascii {
            text += &format!("  {p}\n");
        }
        degrees.push(json!({
            "degree": l,
            "dim": space.dim(),
            "basis": serde_json::to_value(&space.basis).map_err(|e| CliError::new(Code::Overflow, e.to_string()))?,
            "basis_text": ascii,
        }));
    }
    let psi = if a.is_indecomposable() {
        match bilinear_form(a) {
            Ok(form) => {
                text += &format!("psi = {}\n", form.polynomial().to_ascii());
                Some(form)
            }
            Err(InvariantError::NonSymmetrizable) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let json = json!({
        "matrix": a.rows(),
        "degrees": degrees,
        "psi": serde_json::to_value(&psi).map_err(|e| CliError::new(Code::Overflow, e.to_string()))?,
    });
    Ok(Output::ok(json, text))
}

pub fn subalgebra(a: &CartanMatrix) -> Result<Output, CliError> {
    let cyc = check_c1_c2(a)?.map_err(|f| CliError::new(Code::CycleCondition, f.to_string()))?;
    let b = subalgebra_cartan(a, &cyc)?;
    let kind = kind_name(&b);
    let symmetrizable = b.symmetrize().exists();
    let json = json!({
        "a": a.rows(),
        "labeling": cyc.one_based(),
        "b": b.rows(),
        "type": kind,
        "symmetrizable": symmetrizable,
    });
    let text = format!(
        "A = {a}\nlabeling = {:?}\nB = {b}\ntype: {kind}\nsymmetrizable: {}\n",
        cyc.one_based(),
        if symmetrizable { "yes" } else { "no" }
    );
    Ok(Output::ok(json, text))
}

fn series_text(s: &[i128], var: &str) -> String {
    let terms: Vec<String> = s
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("{c}*{var}"),
            _ => format!("{c}*{var}^{k}"),
        })
        .collect();
    format!("{} + O({var}^{})", terms.join(" + "), s.len())
}

pub fn poincare(a: &CartanMatrix, max_length: usize, degree_cutoff: u32) -> Result<Output, CliError> {
    if a.classify().kind() == Some(Kind::Finite) {
        let series = flag_poincare(a, max_length)?;
        let text = format!("P_F(q) = {}\n", series_text(&series, "q"));
        return Ok(Output::ok(json!({ "n": a.rank(), "flag_series": series }), text));
    }
    let report = homotopy_report(a, max_length, degree_cutoff)?;
    let mut text = format!("epsilon = {}\n", report.epsilon);
    if let Some(tau) = report.tau {
        text += &format!("tau = {tau}\n");
    }
    text += &format!("P_F(q) = {}\n", series_text(&report.flag_series, "q"));
    let counts: Vec<String> = report.i_even.iter().map(|(d, i)| format!("i{d}={i}")).collect();
    text += &format!("even generators: {}\n", counts.join(" "));
    text += &format!("P_G(q) = {}\n", series_text(&report.group_series, "q"));
    text += &format!("reconstruction: {}\n", if report.reconstruction_ok { "ok" } else { "FAILED" });
    let json = serde_json::to_value(&report).map_err(|e| CliError::new(Code::Overflow, e.to_string()))?;
    Ok(Output {
        json,
        text,
        failed: !report.reconstruction_ok,
    })
}

pub fn cohomology(a: &CartanMatrix, max_length: usize, degree_cutoff: u32) -> Result<Output, CliError> {
    let p = cohomology_presentation(a, max_length, degree_cutoff)?;
    let bound = if p.connectivity_is_lower_bound { " (at least)" } else { "" };
    let text = format!(
        "H*(F(A)) = {}\nH*(G(A)) = {}\nG(A) is rationally {}-connected{bound}\ndim pi_odd = {}\n",
        p.flag_text, p.group_text, p.connectivity, p.pi_odd_dim
    );
    let json = serde_json::to_value(&p).map_err(|e| CliError::new(Code::Overflow, e.to_string()))?;
    Ok(Output::ok(json, text))
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> WeightPolynomial {
    let terms = monomials_of_degree(n, degree)
        .into_iter()
        .map(|m| (m.exponents().to_vec(), rational(rng.gen_range(-3..=3))))
        .collect::<Vec<_>>();
    WeightPolynomial::from_terms(n, terms).unwrap()
}

/// Runs every check that applies to `A` and fails if any of them fails.
pub fn verify(a: &CartanMatrix, max_degree: u32, max_length: usize, seed: u64) -> Result<Output, CliError> {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let kind = a.classify().kind();
    let symmetrizable = a.is_indecomposable() && a.symmetrize().exists();

    match kind {
        Some(Kind::Indefinite) => {
            let r = verify_main_theorem(a, max_degree)?;
            let dims: Vec<String> = r.degrees.iter().map(|d| d.dim.to_string()).collect();
            checks.push(Check {
                name: "main_theorem".into(),
                pass: r.pass,
                detail: format!("dims ({}) for l = 0..{max_degree}", dims.join(",")),
            });
        }
        _ => skipped.push("main_theorem: requires an indecomposable indefinite matrix".to_string()),
    }

    if symmetrizable {
        let psi = bilinear_form(a)?.polynomial();
        for m in 1..=(max_degree / 2).max(1) {
            let r = verify_layer_recurrences(a, &psi.pow(m))?;
            let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.equation.as_str()).collect();
            checks.push(Check {
                name: format!("recurrences[psi^{m}]"),
                pass: r.pass,
                detail: if failed.is_empty() {
                    format!("{} equations", r.checks.len())
                } else {
                    format!("failed: {}", failed.join(", "))
                },
            });
        }
    } else {
        skipped.push("recurrences: requires an indecomposable symmetrizable matrix".to_string());
    }

    if matches!(kind, Some(Kind::Affine | Kind::Indefinite)) {
        let mut pass = true;
        for l in 1..=max_degree {
            pass &= check_divisibility_lemma(a, l)?.pass;
        }
        checks.push(Check {
            name: "divisibility".into(),
            pass,
            detail: format!("no w_i divides an invariant of degree 1..{max_degree}"),
        });
        let cutoff = 2 * max_length as u32;
        match homotopy_report(a, max_length, cutoff) {
            Ok(r) => checks.push(Check {
                name: "flag_series_round_trip".into(),
                pass: r.reconstruction_ok,
                detail: format!("to t^{max_length}, epsilon = {}", r.epsilon),
            }),
            Err(e @ (TopologyError::NegativeGeneratorCount { .. } | TopologyError::InconsistentSeries { .. })) => {
                checks.push(Check {
                    name: "flag_series_round_trip".into(),
                    pass: false,
                    detail: e.to_string(),
                })
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        skipped.push("divisibility, flag_series_round_trip: require an indecomposable non-finite matrix".to_string());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    let mut disagree = Vec::new();
    let top = max_degree.clamp(1, 4);
    let mut samples: Vec<WeightPolynomial> = (0..16)
        .map(|k| random_homogeneous(&mut rng, a.rank(), 1 + k % top))
        .collect();
    for l in 1..=top {
        samples.extend(invariant_space(a, l).basis);
    }
    for (k, f) in samples.iter().enumerate() {
        if invariance_check_eq1(a, f)? == is_invariant(a, f)? {
            agree += 1;
        } else {
            disagree.push(k);
        }
    }
    checks.push(Check {
        name: "derivative_vs_substitution".into(),
        pass: disagree.is_empty(),
        detail: format!("{agree}/{} agree (seed {seed})", samples.len()),
    });

    if a.rank() >= 3 {
        if let Ok(Ok(cyc)) = check_c1_c2(a) {
            let r = subalgebra_cartan(a, &cyc);
            checks.push(Check {
                name: "subalgebra_cartan".into(),
                pass: r.is_ok(),
                detail: match r {
                    Ok(b) => format!("B = {b}"),
                    Err(e) => e.to_string(),
                },
            });
        }
    }

    let pass = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        text += &format!("{} {}: {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    for s in &skipped {
        text += &format!("SKIP {s}\n");
    }
    text += if pass { "all checks passed\n" } else { "some checks FAILED\n" };
    let json = json!({
        "matrix": a.rows(),
        "checks": checks.iter().map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail })).collect::<Vec<_>>(),
        "skipped": skipped,
        "pass": pass,
    });
    Ok(Output {
        json,
        text,
        failed: !pass,
    })
}
