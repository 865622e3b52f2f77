//! Exact combinatorics of compact and real simple Lie algebras.
//!
//! The crate builds the irreducible root systems A–G from their Cartan
//! matrices, computes the associated weight/root/coweight lattices and their
//! quotients (centers, fundamental groups), works with the affine Weyl group
//! and its fundamental alcove, classifies real forms through Vogan diagrams,
//! and computes strongly orthogonal rank. A small floating-point module
//! covers the polar decomposition `g = k·exp(X)` and the hyperbolic-plane
//! Cartan embedding.
//!
//! All lattice-side arithmetic is exact: integer matrices, big rationals and
//! Smith normal form. The numeric side is generic over `f32`/`f64`.

pub mod alcove;
pub mod diagram;
pub mod lattice;
pub mod matrix;
pub mod polar;
pub mod rootsys;
pub mod scalar;
pub mod snf;
pub mod strongorth;
pub mod vogan;

pub use matrix::{Matrix, MatrixError};
pub use snf::{smith_normal_form, SmithNormalForm};

/// Arbitrary-precision integer used for exact lattice data.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<Int>;

/// Rational matrix with arbitrary-precision entries.
pub type RatMatrix = Matrix<Rational>;

/// Double-precision square matrix for the numeric module.
pub type MatF = Matrix<f64>;

pub(crate) fn rational_from_i64(x: i64) -> Rational {
    Rational::from_integer(Int::from(x))
}
