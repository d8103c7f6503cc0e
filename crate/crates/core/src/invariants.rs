//! The graded ring of Weyl-group invariant polynomials, computed one degree at
//! a time as the kernel of `f ↦ (σ₁f − f, …, σₙf − f)` on the monomial basis.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cartan::{CartanError, CartanMatrix, Kind};
use crate::polyring::{
    monomials_of_degree, rational, reflection_images, simple_root, weyl_action, Monomial, PolyError, Rational,
    RationalMatrix, WeightPolynomial,
};
use crate::polyring::{binomial_rational, inverse_factorial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("matrix is decomposable into {0} blocks")]
    Decomposable(usize),
    #[error("matrix is {0:?}, expected indefinite")]
    NotIndefinite(Kind),
    #[error("matrix is of finite type")]
    FiniteType,
    #[error("matrix is not symmetrizable")]
    NonSymmetrizable,
    #[error("polynomial is not Weyl-invariant")]
    NotInvariant,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<CartanError> for InvariantError {
    fn from(e: CartanError) -> Self {
        match e {
            CartanError::Decomposable(k) => InvariantError::Decomposable(k),
            CartanError::NotIndefinite(k) => InvariantError::NotIndefinite(k),
            other => unreachable!("unexpected cartan error {other}"),
        }
    }
}

/// Basis of the degree-`l` invariants `I^l(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSpace {
    pub degree: u32,
    pub basis: Vec<WeightPolynomial>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `f ↦ σ_i(f)` restricted to monomials of one degree, with the powers of the
/// image of `ω_i` cached.
struct ReflectionOnMonomials {
    powers: Vec<WeightPolynomial>,
    var: usize,
}

impl ReflectionOnMonomials {
    fn new(a: &CartanMatrix, i: usize, max_degree: u32) -> Self {
        let image = reflection_images(a, i).swap_remove(i);
        let mut powers = vec![WeightPolynomial::one(a.rank())];
        for k in 1..=max_degree as usize {
            let next = &powers[k - 1] * &image;
            powers.push(next);
        }
        ReflectionOnMonomials { powers, var: i }
    }

    fn apply(&self, m: &Monomial) -> WeightPolynomial {
        let e = m.exponents()[self.var];
        let mut rest = m.exponents().to_vec();
        rest[self.var] = 0;
        &WeightPolynomial::monomial(Monomial::new(rest), Rational::one()) * &self.powers[e as usize]
    }
}

/// `I^l(A)` as the nullspace of the stacked system `σ_i(f) − f = 0`. The basis
/// follows the RREF free-column pattern over monomials in descending
/// graded-lex order.
pub fn invariant_space(a: &CartanMatrix, degree: u32) -> InvariantSpace {
    let n = a.rank();
    let monomials = monomials_of_degree(n, degree);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let size = monomials.len();
    let mut system = RationalMatrix::zeros(n * size, size);
    for i in 0..n {
        let refl = ReflectionOnMonomials::new(a, i, degree);
        for (col, m) in monomials.iter().enumerate() {
            let image = refl.apply(m);
            for (tm, c) in image.terms() {
                system[(i * size + index[tm], col)] += c;
            }
            system[(i * size + col, col)] -= Rational::one();
        }
    }
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| {
            WeightPolynomial::from_terms(
                n,
                monomials.iter().zip(v).map(|(m, c)| (m.exponents().to_vec(), c)),
            )
            .unwrap()
        })
        .collect();
    InvariantSpace { degree, basis }
}

/// Whether `σ_i(f) = f` for every generator, by direct substitution.
pub fn is_invariant(a: &CartanMatrix, f: &WeightPolynomial) -> Result<bool, InvariantError> {
    for i in 0..a.rank() {
        if weyl_action(a, i, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invariance of a homogeneous `f` through the derivative identity
/// `Σ_{m=1}^{l} (−1)^{m+1}/m! · ∂^m f/∂ω_j^m · α_j^{m−1} = 0` for every `j`.
pub fn invariance_check_eq1(a: &CartanMatrix, f: &WeightPolynomial) -> Result<bool, InvariantError> {
    let n = a.rank();
    if f.nvars() != n {
        return Err(PolyError::DimensionMismatch { expected: n, found: f.nvars() }.into());
    }
    if f.is_zero() {
        return Ok(true);
    }
    let l = f.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
    for j in 0..n {
        let alpha = simple_root(a, j);
        let mut alpha_pow = WeightPolynomial::one(n);
        let mut sum = WeightPolynomial::zero(n);
        for m in 1..=l {
            let sign = if m % 2 == 1 { rational(1) } else { rational(-1) };
            let term = &f.partial(j, m)? * &alpha_pow;
            sum = &sum + &term.scale(&(sign * inverse_factorial(m)));
            alpha_pow = &alpha_pow * &alpha;
        }
        if !sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients `λ` of the invariant form `ψ = Σ_{i,j} λ_ij ω_i ω_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub lambda: Vec<Vec<Rational>>,
}

impl BilinearForm {
    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    /// `ψ` as a polynomial.
    pub fn polynomial(&self) -> WeightPolynomial {
        let n = self.rank();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                terms.push((e, self.lambda[i][j].clone()));
            }
        }
        WeightPolynomial::from_terms(n, terms).unwrap()
    }

    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.lambda.clone())
    }

    /// `ω*_k = Σ_{j≠k} λ_jj a_kj ω_j`.
    pub fn omega_star(&self, a: &CartanMatrix, k: usize) -> WeightPolynomial {
        let coeffs: Vec<Rational> = (0..a.rank())
            .map(|j| {
                if j == k {
                    Rational::zero()
                } else {
                    &self.lambda[j][j] * rational(a.get(k, j))
                }
            })
            .collect();
        WeightPolynomial::linear_form(&coeffs)
    }

    /// The same form rescaled by `c`.
    pub fn scaled(&self, c: &Rational) -> BilinearForm {
        BilinearForm {
            lambda: self.lambda.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }
}

impl Serialize for BilinearForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            lambda: Vec<Vec<String>>,
            psi: &'a WeightPolynomial,
        }
        let psi = self.polynomial();
        Repr {
            lambda: self.lambda.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
            psi: &psi,
        }
        .serialize(serializer)
    }
}

/// `ω'_k = Σ_{j≠k} a_jk ω_j`, the part of `α_k` off the `ω_k` axis.
pub fn omega_prime(a: &CartanMatrix, k: usize) -> WeightPolynomial {
    let coeffs: Vec<Rational> = (0..a.rank())
        .map(|j| if j == k { Rational::zero() } else { rational(a.get(j, k)) })
        .collect();
    WeightPolynomial::linear_form(&coeffs)
}

/// The invariant form with `λ_ii = d_i` and `λ_ij = a_ij·d_j/2`, where `d` is
/// the normalized symmetrizer.
pub fn bilinear_form(a: &CartanMatrix) -> Result<BilinearForm, InvariantError> {
    a.require_indecomposable()?;
    let d = a.symmetrize().d.ok_or(InvariantError::NonSymmetrizable)?;
    let n = a.rank();
    let half = crate::polyring::ratio(1, 2);
    let lambda = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        d[i].clone()
                    } else {
                        rational(a.get(i, j)) * &d[j] * &half
                    }
                })
                .collect()
        })
        .collect();
    Ok(BilinearForm { lambda })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub dim: usize,
    pub expected_dim: usize,
    /// Whether the basis element is proportional to `ψ^{l/2}`; present only
    /// for symmetrizable input in even degree.
    pub proportional_to_psi_power: Option<bool>,
    pub basis: Vec<WeightPolynomial>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub symmetrizable: bool,
    pub psi: Option<BilinearForm>,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

/// Checks, for every degree `0..=max_degree`, that `I^l(A)` is spanned by
/// `ψ^{l/2}` (symmetrizable, `l` even), or is zero (odd `l`, or
/// non-symmetrizable with `l ≥ 1`).
pub fn verify_main_theorem(a: &CartanMatrix, max_degree: u32) -> Result<MainTheoremReport, InvariantError> {
    let kind = a.kind()?;
    if kind != Kind::Indefinite {
        return Err(InvariantError::NotIndefinite(kind));
    }
    let psi = match bilinear_form(a) {
        Ok(form) => Some(form),
        Err(InvariantError::NonSymmetrizable) => None,
        Err(e) => return Err(e),
    };
    let psi_poly = psi.as_ref().map(BilinearForm::polynomial);
    let degrees: Vec<DegreeCheck> = (0..=max_degree)
        .map(|l| {
            let space = invariant_space(a, l);
            let expected_dim = match &psi_poly {
                _ if l == 0 => 1,
                Some(_) if l % 2 == 0 => 1,
                _ => 0,
            };
            let proportional = psi_poly.as_ref().filter(|_| l % 2 == 0).map(|p| {
                space.dim() == 1 && space.basis[0].is_proportional_to(&p.pow(l / 2))
            });
            let pass = space.dim() == expected_dim && proportional.unwrap_or(true);
            DegreeCheck {
                degree: l,
                dim: space.dim(),
                expected_dim,
                proportional_to_psi_power: proportional,
                basis: space.basis,
                pass,
            }
        })
        .collect();
    let pass = degrees.iter().all(|d| d.pass);
    Ok(MainTheoremReport {
        symmetrizable: psi.is_some(),
        psi,
        degrees,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub equation: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub degree: u32,
    /// The variable the layers are taken along (0-based; the last one).
    pub layer_variable: usize,
    pub checks: Vec<EquationCheck>,
    pub pass: bool,
}

/// `σ'_k` on polynomials not involving `ω_last`: the reflection of the
/// principal submatrix that drops the last index.
fn restricted_reflection_images(a: &CartanMatrix, k: usize, last: usize) -> Vec<WeightPolynomial> {
    let n = a.rank();
    let mut images = reflection_images(a, k);
    let coeffs: Vec<Rational> = (0..n)
        .map(|j| {
            if j == last {
                Rational::zero()
            } else if j == k {
                rational(-1)
            } else {
                rational(-a.get(j, k))
            }
        })
        .collect();
    images[k] = WeightPolynomial::linear_form(&coeffs);
    images
}

/// Layers an invariant `f = Σ f_i(ω')·ω_n^{l−i}` along the last variable and
/// checks the recurrences those layers must satisfy: the `σ_n` relation
/// `f_j = Σ_{i≤j} (−1)^{l−i} C(l−i, l−j) f_i ω'^{j−i}_n`, the `σ'_k` relations
/// for `k ≠ n`, the closed forms for `f_1` and `f_3` in even degree, `f_0 = 0`
/// in odd degree, and `ω'_n | f_{l−1}`.
pub fn verify_layer_recurrences(a: &CartanMatrix, f: &WeightPolynomial) -> Result<RecurrenceReport, InvariantError> {
    let n = a.rank();
    if f.nvars() != n {
        return Err(PolyError::DimensionMismatch { expected: n, found: f.nvars() }.into());
    }
    if !f.is_homogeneous() {
        return Err(PolyError::NotHomogeneous.into());
    }
    if !is_invariant(a, f)? {
        return Err(InvariantError::NotInvariant);
    }
    let last = n - 1;
    let l = f.homogeneous_degree().unwrap_or(0);
    let layers = f.layer_decompose(last)?;
    let wp = omega_prime(a, last);
    let wp_pow = |k: u32| wp.pow(k);
    let mut checks = Vec::new();

    if !f.is_zero() {
        for j in 0..=l {
            let mut rhs = WeightPolynomial::zero(n);
            for i in 0..=j {
                let sign = if (l - i) % 2 == 0 { rational(1) } else { rational(-1) };
                let c = sign * binomial_rational(l - i, l - j);
                rhs = &rhs + &(&layers[i as usize] * &wp_pow(j - i)).scale(&c);
            }
            checks.push(EquationCheck {
                equation: format!("sigma_n[j={j}]"),
                pass: rhs == layers[j as usize],
            });
        }

        for k in (0..n).filter(|&k| k != last) {
            let images = restricted_reflection_images(a, k, last);
            let shift = rational(-a.get(last, k));
            for i in 0..=l {
                let lhs = layers[i as usize].substitute(&images)?;
                let mut rhs = WeightPolynomial::zero(n);
                let mut shift_pow = Rational::one();
                for j in 0..=(l - i) {
                    let d = layers[(i + j) as usize].partial(k, j)?;
                    rhs = &rhs + &d.scale(&(&shift_pow * inverse_factorial(j)));
                    shift_pow *= &shift;
                }
                checks.push(EquationCheck {
                    equation: format!("sigma_k[k={},i={i}]", k + 1),
                    pass: lhs == rhs,
                });
            }
        }

        if l % 2 == 0 && l >= 2 {
            // f₁ = ½·C(l,1)·f₀·ω'_n
            let rhs = (&layers[0] * &wp).scale(&(binomial_rational(l, 1) * crate::polyring::ratio(1, 2)));
            checks.push(EquationCheck {
                equation: "f1_closed_form".into(),
                pass: rhs == layers[1],
            });
        }
        if l % 2 == 0 && l >= 4 {
            // f₃ = ½·C(l−2,1)·f₂·ω'_n − ¼·C(l,3)·f₀·ω'^3_n
            let a_term = (&layers[2] * &wp).scale(&(binomial_rational(l - 2, 1) * crate::polyring::ratio(1, 2)));
            let b_term = (&layers[0] * &wp_pow(3)).scale(&(binomial_rational(l, 3) * crate::polyring::ratio(1, 4)));
            checks.push(EquationCheck {
                equation: "f3_closed_form".into(),
                pass: &a_term - &b_term == layers[3],
            });
        }
        if l % 2 == 1 {
            checks.push(EquationCheck {
                equation: "odd_f0_vanishes".into(),
                pass: layers[0].is_zero(),
            });
        }
        if l >= 1 && !wp.is_zero() {
            checks.push(EquationCheck {
                equation: "omega_prime_divides_f_l-1".into(),
                pass: layers[(l - 1) as usize].divisible_by_linear(&wp)?,
            });
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(RecurrenceReport {
        degree: l,
        layer_variable: last,
        checks,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityCheck {
    pub basis_index: usize,
    pub variable: usize,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub degree: u32,
    pub checks: Vec<DivisibilityCheck>,
    pub pass: bool,
}

/// No `ω_i` divides a nonzero invariant when `A` is affine or indefinite.
pub fn check_divisibility_lemma(a: &CartanMatrix, degree: u32) -> Result<DivisibilityReport, InvariantError> {
    if a.kind()? == Kind::Finite {
        return Err(InvariantError::FiniteType);
    }
    let space = invariant_space(a, degree);
    let mut checks = Vec::new();
    for (idx, f) in space.basis.iter().enumerate() {
        for var in 0..a.rank() {
            // divisibility by ω_var means the ω_var-free layer vanishes
            let divisible = f.layer_decompose(var)?.last().is_some_and(WeightPolynomial::is_zero);
            checks.push(DivisibilityCheck {
                basis_index: idx,
                variable: var,
                divisible,
            });
        }
    }
    let pass = checks.iter().all(|c| !c.divisible);
    Ok(DivisibilityReport { degree, checks, pass })
}
