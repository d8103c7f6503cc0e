use kminv::invariants::{
    bilinear_form, invariance_check_eq1, invariant_space, is_invariant, verify_layer_recurrences, verify_main_theorem,
};
use kminv::polyring::{rational, Rational};
use kminv::weyl::enumerate_elements;
use kminv::{CartanMatrix, Kind, WeightPolynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> CartanMatrix {
    CartanMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

type Series = Vec<Rational>;

fn series_mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_inverse(a: &Series, len: usize) -> Series {
    let mut out = vec![Rational::zero(); len];
    out[0] = a[0].recip();
    for k in 1..len {
        let mut acc = Rational::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -acc * &out[0];
    }
    out
}

/// det(I − tM) by cofactor expansion over polynomial entries.
fn det_one_minus_tm(entry: &dyn Fn(usize, usize) -> Series, idx: &[usize], cols: &[usize], len: usize) -> Series {
    if idx.is_empty() {
        return vec![Rational::one()];
    }
    let r = idx[0];
    let mut total = vec![Rational::zero(); len];
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_one_minus_tm(entry, &idx[1..], &rest, len);
        let term = series_mul(&entry(r, c), &minor, len);
        for (t, v) in total.iter_mut().zip(term) {
            if k % 2 == 0 {
                *t += v;
            } else {
                *t -= v;
            }
        }
    }
    total
}

/// Molien series `1/|W| Σ_w 1/det(1 − t·w)` of a finite Weyl group.
fn molien(a: &CartanMatrix, max_len: usize, degrees: usize) -> Vec<Rational> {
    let n = a.rank();
    let levels = enumerate_elements(a, max_len).unwrap();
    let elements: Vec<_> = levels.into_iter().flatten().collect();
    let len = degrees + 1;
    let mut sum = vec![Rational::zero(); len];
    for w in &elements {
        let mat = w.matrix();
        let entry = |r: usize, c: usize| -> Series {
            let delta = if r == c { rational(1) } else { rational(0) };
            let v = Rational::from_integer((mat.get(r, c) as i64).into());
            vec![delta, -v]
        };
        let idx: Vec<usize> = (0..n).collect();
        let det = det_one_minus_tm(&entry, &idx, &idx, len);
        for (s, v) in sum.iter_mut().zip(series_inverse(&det, len)) {
            *s += v;
        }
    }
    let order = rational(elements.len() as i64);
    sum.into_iter().map(|x| x / &order).collect()
}

fn dims(a: &CartanMatrix, degrees: u32) -> Vec<Rational> {
    (0..=degrees).map(|l| rational(invariant_space(a, l).dim() as i64)).collect()
}

#[test]
fn finite_types_match_molien() {
    let cases = [
        (m(&[&[2, -1], &[-1, 2]]), 4, 8),
        (m(&[&[2, -2], &[-1, 2]]), 5, 8),
        (m(&[&[2, -3], &[-1, 2]]), 7, 8),
        (m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]), 7, 6),
        (m(&[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]]), 10, 6),
    ];
    for (a, max_len, degrees) in cases {
        assert_eq!(dims(&a, degrees), molien(&a, max_len, degrees as usize), "{a}");
    }
    let a2 = m(&[&[2, -1], &[-1, 2]]);
    let expected: Vec<Rational> = [1, 0, 1, 1, 1, 1, 2].iter().map(|&x| rational(x)).collect();
    assert_eq!(dims(&a2, 6), expected);
}

#[test]
fn block_sums_multiply_hilbert_series() {
    let a2 = m(&[&[2, -1], &[-1, 2]]);
    let a23 = m(&[&[2, -2], &[-3, 2]]);
    let sum = m(&[&[2, -1, 0, 0], &[-1, 2, 0, 0], &[0, 0, 2, -2], &[0, 0, -3, 2]]);
    let left = dims(&a2, 5);
    let right = dims(&a23, 5);
    let product = series_mul(&left, &right, 6);
    assert_eq!(dims(&sum, 5), product);
}

#[test]
fn affine_rank_two_is_polynomial_in_psi() {
    for (a, b) in [(2, 2), (1, 4)] {
        let c = CartanMatrix::rank_two(a, b).unwrap();
        let psi = bilinear_form(&c).unwrap().polynomial();
        for l in 0..=6u32 {
            let s = invariant_space(&c, l);
            if l % 2 == 0 {
                assert_eq!(s.dim(), 1);
                assert!(s.basis[0].is_proportional_to(&psi.pow(l / 2)));
            } else {
                assert_eq!(s.dim(), 0);
            }
        }
    }
}

fn indefinite_rank_three() -> impl Strategy<Value = CartanMatrix> {
    // Off-diagonal entries in -3..=-1 with optional zeros on one symmetric pair.
    (proptest::collection::vec(1i64..=3, 6), 0usize..4).prop_filter_map("indefinite indecomposable", |(v, zero)| {
        let mut rows = vec![vec![2, -v[0], -v[1]], vec![-v[2], 2, -v[3]], vec![-v[4], -v[5], 2]];
        let pairs = [(0, 1), (0, 2), (1, 2)];
        if let Some(&(i, j)) = pairs.get(zero) {
            rows[i][j] = 0;
            rows[j][i] = 0;
        }
        let a = CartanMatrix::validate(&rows).ok()?;
        (a.kind().ok()? == Kind::Indefinite).then_some(a)
    })
}

fn small_poly(nvars: usize, degree: u32) -> impl Strategy<Value = WeightPolynomial> {
    let monos = kminv::polyring::monomials_of_degree(nvars, degree);
    proptest::collection::vec(-2i64..=2, monos.len()).prop_map(move |cs| {
        WeightPolynomial::from_terms(
            nvars,
            monos.iter().zip(cs).map(|(m, c)| (m.exponents().to_vec(), rational(c))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_two_dichotomy(a in indefinite_rank_three()) {
        let dim = invariant_space(&a, 2).dim();
        prop_assert_eq!(dim == 1, a.symmetrize().exists());
        prop_assert!(dim <= 1);
    }

    #[test]
    fn main_theorem_random_rank_three(a in indefinite_rank_three()) {
        let report = verify_main_theorem(&a, 4).unwrap();
        prop_assert!(report.pass);
    }

    #[test]
    fn derivative_criterion_agrees_with_substitution(
        a in indefinite_rank_three(),
        f in (1u32..=5).prop_flat_map(|d| small_poly(3, d)),
        use_psi in any::<bool>(),
    ) {
        let f = match (use_psi, bilinear_form(&a)) {
            (true, Ok(form)) => form.polynomial().scale(&rational(3)),
            _ => f,
        };
        prop_assert_eq!(invariance_check_eq1(&a, &f).unwrap(), is_invariant(&a, &f).unwrap());
    }

    #[test]
    fn derivative_criterion_on_finite_invariants(d in 2u32..=5, seed in proptest::collection::vec(-2i64..=2, 6), take_basis in any::<bool>()) {
        let a2 = m(&[&[2, -1], &[-1, 2]]);
        let monos = kminv::polyring::monomials_of_degree(2, d);
        let f = WeightPolynomial::from_terms(
            2,
            monos.iter().zip(seed.iter().cycle()).map(|(m, &c)| (m.exponents().to_vec(), rational(c))),
        )
        .unwrap();
        let space = invariant_space(&a2, d);
        let f = if take_basis && space.dim() > 0 { space.basis[0].clone() } else { f };
        prop_assert_eq!(invariance_check_eq1(&a2, &f).unwrap(), is_invariant(&a2, &f).unwrap());
    }

    #[test]
    fn basis_elements_are_fixed_by_substitution(a in indefinite_rank_three(), l in 0u32..=4) {
        for f in invariant_space(&a, l).basis {
            prop_assert!(is_invariant(&a, &f).unwrap());
            prop_assert_eq!(f.homogeneous_degree().unwrap_or(0), l);
        }
    }

    #[test]
    fn psi_powers_satisfy_recurrences(a in indefinite_rank_three(), k in 1u32..=3) {
        if let Ok(form) = bilinear_form(&a) {
            let report = verify_layer_recurrences(&a, &form.polynomial().pow(k)).unwrap();
            prop_assert!(report.pass);
        }
    }
}
