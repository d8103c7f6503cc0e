//! Rational homotopy data of Kac-Moody groups and their flag manifolds.
//!
//! Series are carried internally in `t = q²` (Schubert cells have real
//! dimension `2ℓ(w)`) and re-graded to `q` on output. The flag manifold series
//! factors as
//!
//! ```text
//! P_A(t) = (1 − t²)^ε · (1 − t)^{−n} · Π_{k≥2} (1 − t^k)^{−i_{2k}}
//! ```
//!
//! and the group series is `Π (1 + q^{2k−1})^{i_{2k−1}} / (1 − q^{2k})^{i_{2k}}`
//! with `i₃ = ε` the only odd count.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cartan::{CartanError, CartanMatrix, Kind};
use crate::invariants::{bilinear_form, BilinearForm, InvariantError};
use crate::polyring::RationalMatrix;
use crate::weyl::{enumerate_by_length, WeylError};

pub const DEFAULT_LENGTH_CUTOFF: usize = 12;
pub const DEFAULT_DEGREE_CUTOFF: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("matrix is decomposable into {0} blocks")]
    Decomposable(usize),
    #[error("matrix is {0:?}, expected indefinite")]
    NotIndefinite(Kind),
    #[error("matrix is of finite type")]
    FiniteType,
    #[error("matrix is not symmetrizable")]
    NonSymmetrizable,
    #[error("extracted generator count i_{degree} = {value} is negative")]
    NegativeGeneratorCount { degree: u32, value: i128 },
    #[error("flag series is inconsistent with the product form: residual coefficient {value} at t^{power}")]
    InconsistentSeries { power: usize, value: i128 },
    #[error("flag series has {have} terms in t, need {needed}")]
    SeriesTooShort { needed: usize, have: usize },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

impl From<CartanError> for TopologyError {
    fn from(e: CartanError) -> Self {
        match e {
            CartanError::Decomposable(k) => TopologyError::Decomposable(k),
            CartanError::NotIndefinite(k) => TopologyError::NotIndefinite(k),
            other => unreachable!("unexpected cartan error {other}"),
        }
    }
}

impl From<InvariantError> for TopologyError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Decomposable(k) => TopologyError::Decomposable(k),
            InvariantError::NonSymmetrizable => TopologyError::NonSymmetrizable,
            other => unreachable!("unexpected invariant error {other}"),
        }
    }
}

/// 1 when `A` is symmetrizable, 0 otherwise.
pub fn epsilon(a: &CartanMatrix) -> Result<u8, TopologyError> {
    a.require_indecomposable()?;
    Ok(u8::from(a.symmetrize().exists()))
}

/// Inertia `(p, q, r)`: numbers of positive, negative and zero squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
///
/// A zero pivot is replaced by a nonzero diagonal entry further down when one
/// exists; otherwise a row/column `j` with `m_kj ≠ 0` is added to `k`, which
/// makes the pivot `2m_kj`.
pub fn signature_of(m: &RationalMatrix) -> Signature {
    let n = m.rows();
    assert_eq!(n, m.cols(), "matrix must be square");
    let mut m = m.clone();
    let mut sig = Signature { p: 0, q: 0, r: 0 };
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                swap_congruent(&mut m, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                add_congruent(&mut m, k, j);
            }
        }
        let pivot = m[(k, k)].clone();
        if pivot.is_zero() {
            sig.r += 1;
            continue;
        }
        if pivot.is_positive() {
            sig.p += 1;
        } else {
            sig.q += 1;
        }
        for i in k + 1..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] / &pivot;
            for c in k..n {
                let delta = &f * &m[(k, c)];
                m[(i, c)] -= delta;
            }
            for r in k..n {
                let delta = &f * &m[(r, k)];
                m[(r, i)] -= delta;
            }
        }
    }
    sig
}

fn swap_congruent(m: &mut RationalMatrix, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let t = m[(a, c)].clone();
        m[(a, c)] = m[(b, c)].clone();
        m[(b, c)] = t;
    }
    for r in 0..n {
        let t = m[(r, a)].clone();
        m[(r, a)] = m[(r, b)].clone();
        m[(r, b)] = t;
    }
}

/// Row `k += row j`, then column `k += column j`.
fn add_congruent(m: &mut RationalMatrix, k: usize, j: usize) {
    let n = m.rows();
    for c in 0..n {
        let v = m[(j, c)].clone();
        m[(k, c)] += v;
    }
    for r in 0..n {
        let v = m[(r, j)].clone();
        m[(r, k)] += v;
    }
}

/// `τ(A)`, the inertia of the invariant form's coefficient matrix.
pub fn signature_tau(a: &CartanMatrix) -> Result<Signature, TopologyError> {
    Ok(signature_of(&bilinear_form(a)?.matrix()))
}

/// Growth series `Σ_ℓ #{w : ℓ(w) = ℓ} t^ℓ` up to `t^N`.
pub fn flag_series_t(a: &CartanMatrix, length_cutoff: usize) -> Result<Vec<i128>, TopologyError> {
    Ok(enumerate_by_length(a, length_cutoff)?
        .counts
        .into_iter()
        .map(i128::from)
        .collect())
}

/// `P_A(q)` up to `q^{2N}`: the coefficient of `q^{2ℓ}` counts elements of
/// length `ℓ`, odd powers vanish.
pub fn flag_poincare(a: &CartanMatrix, length_cutoff: usize) -> Result<Vec<i128>, TopologyError> {
    Ok(regrade(&flag_series_t(a, length_cutoff)?))
}

/// `f(t) ↦ f(q²)`.
pub fn regrade(t_series: &[i128]) -> Vec<i128> {
    let mut q = vec![0; 2 * t_series.len().saturating_sub(1) + 1];
    for (k, &c) in t_series.iter().enumerate() {
        q[2 * k] = c;
    }
    q
}

fn mul_trunc(a: &[i128], b: &[i128], len: usize) -> Vec<i128> {
    let mut out = vec![0; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 + s·t^k)^e` for any integer `e`, truncated to `len` terms.
fn binomial_power(k: usize, sign: i128, e: i128, len: usize) -> Vec<i128> {
    let mut base = vec![0; len];
    base[0] = 1;
    if k < len {
        base[k] = sign;
    }
    if e >= 0 {
        let mut acc = vec![0; len];
        acc[0] = 1;
        for _ in 0..e {
            acc = mul_trunc(&acc, &base, len);
        }
        acc
    } else {
        // (1 + sign·t^k)^{-1} = Σ (−sign)^m t^{km}
        let mut inv = vec![0; len];
        let mut c = 1;
        let mut p = 0;
        while p < len {
            inv[p] = c;
            c *= -sign;
            if k == 0 {
                break;
            }
            p += k;
        }
        let mut acc = vec![0; len];
        acc[0] = 1;
        for _ in 0..(-e) {
            acc = mul_trunc(&acc, &inv, len);
        }
        acc
    }
}

/// Even generator counts `i_{2k}` for `4 ≤ 2k ≤ L`, read off the flag series
/// (in `t`) by peeling one factor `(1 − t^k)^{−i_{2k}}` at a time.
pub fn extract_from_series(
    n: usize,
    eps: u8,
    t_series: &[i128],
    degree_cutoff: u32,
) -> Result<BTreeMap<u32, i128>, TopologyError> {
    let kmax = (degree_cutoff / 2) as usize;
    let len = kmax + 1;
    if t_series.len() < len {
        return Err(TopologyError::SeriesTooShort { needed: len, have: t_series.len() });
    }
    let mut q = mul_trunc(&t_series[..len], &binomial_power(1, -1, n as i128, len), len);
    q = mul_trunc(&q, &binomial_power(2, -1, -i128::from(eps), len), len);
    if len > 1 && q[1] != 0 {
        return Err(TopologyError::InconsistentSeries { power: 1, value: q[1] });
    }
    let mut counts = BTreeMap::new();
    for k in 2..=kmax {
        let i = q[k];
        if i < 0 {
            return Err(TopologyError::NegativeGeneratorCount { degree: 2 * k as u32, value: i });
        }
        if i > 0 {
            q = mul_trunc(&q, &binomial_power(k, -1, i, len), len);
        }
        counts.insert(2 * k as u32, i);
    }
    Ok(counts)
}

/// As [`extract_from_series`], computing the flag series and `ε` from `A`.
/// Finite type is rejected: its flag manifold is finite-dimensional and has
/// no such factorization.
pub fn extract_generator_sequence(
    a: &CartanMatrix,
    t_series: &[i128],
    degree_cutoff: u32,
) -> Result<BTreeMap<u32, i128>, TopologyError> {
    if a.kind()? == Kind::Finite {
        return Err(TopologyError::FiniteType);
    }
    extract_from_series(a.rank(), epsilon(a)?, t_series, degree_cutoff)
}

/// The product form of the flag series, in `t`, to `len` terms.
pub fn reconstruct_flag_series(n: usize, eps: u8, i_even: &BTreeMap<u32, i128>, len: usize) -> Vec<i128> {
    let mut s = binomial_power(2, -1, i128::from(eps), len);
    s = mul_trunc(&s, &binomial_power(1, -1, -(n as i128), len), len);
    for (&deg, &i) in i_even {
        s = mul_trunc(&s, &binomial_power((deg / 2) as usize, -1, -i, len), len);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyReport {
    pub n: usize,
    pub epsilon: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<Signature>,
    pub length_cutoff: usize,
    pub degree_cutoff: u32,
    /// Coefficients of `P_A(q)`, index = power of `q`.
    pub flag_series: Vec<i128>,
    /// `i_{2k}` by degree `2k`.
    pub i_even: BTreeMap<u32, i128>,
    /// `i_{2k−1}` by degree; only `i₃ = ε` can be nonzero.
    pub i_odd: BTreeMap<u32, i128>,
    /// Coefficients of `P_G(q)` up to `q^L`.
    pub group_series: Vec<i128>,
    pub reconstruction_ok: bool,
}

/// `Π (1 + q^{2k−1})^{i_{2k−1}} / (1 − q^{2k})^{i_{2k}}` up to `q^L`.
pub fn group_poincare(report: &HomotopyReport, degree_cutoff: u32) -> Vec<i128> {
    let len = degree_cutoff as usize + 1;
    let mut s = vec![0; len];
    s[0] = 1;
    for (&deg, &i) in &report.i_odd {
        s = mul_trunc(&s, &binomial_power(deg as usize, 1, i, len), len);
    }
    for (&deg, &i) in &report.i_even {
        s = mul_trunc(&s, &binomial_power(deg as usize, -1, -i, len), len);
    }
    s
}

/// Collects ε, τ, the flag series, the generator counts and the group series.
/// The length cutoff must reach `t^{L/2}`.
pub fn homotopy_report(
    a: &CartanMatrix,
    length_cutoff: usize,
    degree_cutoff: u32,
) -> Result<HomotopyReport, TopologyError> {
    let kind = a.kind()?;
    if kind == Kind::Finite {
        return Err(TopologyError::FiniteType);
    }
    let eps = epsilon(a)?;
    let tau = if eps == 1 { Some(signature_tau(a)?) } else { None };
    let t_series = flag_series_t(a, length_cutoff)?;
    let i_even = extract_from_series(a.rank(), eps, &t_series, degree_cutoff)?;
    let len = (degree_cutoff / 2) as usize + 1;
    let reconstruction_ok = reconstruct_flag_series(a.rank(), eps, &i_even, len) == t_series[..len];
    let mut i_odd = BTreeMap::new();
    for deg in (1..=degree_cutoff).step_by(2) {
        i_odd.insert(deg, if deg == 3 { i128::from(eps) } else { 0 });
    }
    let mut report = HomotopyReport {
        n: a.rank(),
        epsilon: eps,
        tau,
        length_cutoff,
        degree_cutoff,
        flag_series: regrade(&t_series),
        i_even,
        i_odd,
        group_series: Vec::new(),
        reconstruction_ok,
    };
    report.group_series = group_poincare(&report, degree_cutoff);
    Ok(report)
}

/// Generators and relations of `H*(F(A); ℚ)` and `H*(G(A); ℚ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyPresentation {
    pub n: usize,
    pub epsilon: u8,
    /// The relation `ψ`, present iff `ε = 1`.
    pub relation: Option<BilinearForm>,
    /// Even polynomial generators as (degree, multiplicity), degree ≥ 4.
    pub even_generators: Vec<(u32, i128)>,
    /// The exterior generator `y₃`, present iff `ε = 1`.
    pub y3: bool,
    /// `G(A)` is rationally `c`-connected with `c` = this value; a lower
    /// bound when no generator appears up to the cutoff.
    pub connectivity: u32,
    pub connectivity_is_lower_bound: bool,
    pub pi_odd_dim: u8,
    pub degree_cutoff: u32,
    pub flag_text: String,
    pub group_text: String,
}

fn even_text(gens: &[(u32, i128)], cutoff: u32) -> String {
    if gens.is_empty() {
        return format!("Q[z: none up to deg {cutoff}]");
    }
    let parts: Vec<String> = gens.iter().map(|(d, m)| format!("deg {d} x{m}")).collect();
    format!("Q[z: {}]", parts.join(", "))
}

pub fn cohomology_presentation(
    a: &CartanMatrix,
    length_cutoff: usize,
    degree_cutoff: u32,
) -> Result<CohomologyPresentation, TopologyError> {
    let kind = a.kind()?;
    if kind != Kind::Indefinite {
        return Err(TopologyError::NotIndefinite(kind));
    }
    let report = homotopy_report(a, length_cutoff, degree_cutoff)?;
    let n = a.rank();
    let relation = if report.epsilon == 1 { Some(bilinear_form(a)?) } else { None };
    let even_generators: Vec<(u32, i128)> =
        report.i_even.iter().filter(|(_, &m)| m > 0).map(|(&d, &m)| (d, m)).collect();
    let lowest = if report.epsilon == 1 { Some(3) } else { even_generators.first().map(|&(d, _)| d) };
    let (connectivity, connectivity_is_lower_bound) = match lowest {
        Some(d) => (d - 1, false),
        None => (degree_cutoff, true),
    };
    let z = even_text(&even_generators, degree_cutoff);
    let w = format!("Q[w1..w{n}]");
    let flag_text = if report.epsilon == 1 { format!("{w}/<psi> (x) {z}") } else { format!("{w} (x) {z}") };
    let group_text = if report.epsilon == 1 { format!("Lambda[y3] (x) {z}") } else { z };
    Ok(CohomologyPresentation {
        n,
        epsilon: report.epsilon,
        relation,
        even_generators,
        y3: report.epsilon == 1,
        connectivity,
        connectivity_is_lower_bound,
        pi_odd_dim: report.epsilon,
        degree_cutoff,
        flag_text,
        group_text,
    })
}
