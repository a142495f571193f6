//! Exact periodicity analysis for Grover walks on finite graphs.
//!
//! The walk on a graph is periodic when some power of its arc-indexed
//! transfer operator is the identity. This crate decides that question with
//! exact rational arithmetic along two independent routes:
//!
//! * the unitary route computes the minimal polynomial of the transfer
//!   operator and recognizes it as a product of cyclotomic polynomials;
//! * the spectral route works with the vertex transition matrix, maps its
//!   minimal polynomial through the Zhukovskij substitution
//!   `x = (z + 1/z) / 2`, and runs the same cyclotomic recognizer.
//!
//! For distance-regular graphs the spectral route reduces to the small
//! tridiagonal quotient matrix of the intersection array (see [`drg`]).
//!
//! Polynomials and matrices are generic over an exact scalar ring
//! ([`Scalar`]); the aliases below fix the arbitrary-precision types used
//! throughout the analysis.

pub mod algebra;
pub mod drg;
pub mod graphs;
pub mod matrix;
pub mod periodicity;
pub mod scalar;
pub mod spectra;

pub use algebra::cyclotomic::{cyclotomic, is_cyclotomic_product, CyclotomicCertificate};
pub use algebra::poly::Poly;
pub use algebra::{try_to_int_poly, zhukovskij};
pub use matrix::{Matrix, SparseMatrix};
pub use scalar::{Field, Scalar};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial with integer coefficients.
pub type IntPoly = Poly<Integer>;
/// Dense univariate polynomial with rational coefficients.
pub type RatPoly = Poly<Rational>;
/// Dense square or rectangular matrix of rationals.
pub type RationalMatrix = Matrix<Rational>;
/// Dense matrix of integers.
pub type IntMatrix = Matrix<Integer>;
