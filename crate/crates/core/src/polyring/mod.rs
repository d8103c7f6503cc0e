//! Exact multivariate polynomials over the rationals in the fundamental-weight
//! variables, plus the dense rational matrices used to solve invariance systems.

mod action;
mod matrix;
mod poly;

pub use action::{reflection_images, simple_root, weyl_action};
pub use matrix::RationalMatrix;
pub use poly::{monomials_of_degree, Monomial, TermRecord, WeightPolynomial};
pub(crate) use poly::{binomial_rational, inverse_factorial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number used for every coefficient.
pub type Rational = BigRational;

/// Integer as a [`Rational`].
pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced [`Rational`]. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("coefficient {0} does not fit the JSON integer range")]
    CoefficientTooLarge(String),
    #[error("malformed term record: {0}")]
    MalformedTerm(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
