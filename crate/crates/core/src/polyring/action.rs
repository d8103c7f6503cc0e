use crate::cartan::CartanMatrix;

use super::{rational, PolyError, WeightPolynomial};

/// Images of `ω₁..ωₙ` under `σ_i`: `ω_i ↦ ω_i − α_i`, other variables fixed.
pub fn reflection_images(a: &CartanMatrix, i: usize) -> Vec<WeightPolynomial> {
    let n = a.rank();
    (0..n)
        .map(|j| {
            if j == i {
                let coeffs: Vec<_> = (0..n)
                    .map(|k| rational(if k == i { 1 } else { 0 } - a.get(k, i)))
                    .collect();
                WeightPolynomial::linear_form(&coeffs)
            } else {
                WeightPolynomial::var(n, j)
            }
        })
        .collect()
}

/// `α_i = Σ_k a_ki ω_k` as a linear form.
pub fn simple_root(a: &CartanMatrix, i: usize) -> WeightPolynomial {
    let coeffs: Vec<_> = (0..a.rank()).map(|k| rational(a.get(k, i))).collect();
    WeightPolynomial::linear_form(&coeffs)
}

/// `σ_i(p)`.
pub fn weyl_action(a: &CartanMatrix, i: usize, p: &WeightPolynomial) -> Result<WeightPolynomial, PolyError> {
    let n = a.rank();
    if p.nvars() != n {
        return Err(PolyError::DimensionMismatch {
            expected: n,
            found: p.nvars(),
        });
    }
    if i >= n {
        return Err(PolyError::VariableOutOfRange { index: i, nvars: n });
    }
    p.substitute(&reflection_images(a, i))
}
