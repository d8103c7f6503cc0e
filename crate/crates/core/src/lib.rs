//! Exact computations for generalized Cartan matrices and their Weyl groups:
//! classification, invariant polynomial rings by degree, regular subalgebras
//! of hyperbolic matrices, Coxeter growth series, and the rational
//! cohomology data of the associated Kac-Moody groups and flag manifolds.

pub mod cartan;
pub mod invariants;
pub mod polyring;
pub mod subalgebra;
pub mod topology;
pub mod weyl;

pub use cartan::{CartanError, CartanMatrix, Kind, MatrixType, Symmetrizer};
pub use polyring::{Rational, RationalMatrix, WeightPolynomial};
