//! Exact Lie-algebraic discretization of differential operators.
//!
//! Operators are written as normal-ordered elements of the universal
//! enveloping algebra of `[a, b] = 1` ([`AlgebraElement`]). Realizing them
//! with `a = d/dx, b = x` gives differential operators; realizing them with
//! `a = D₊, b = x(1 − δD₋)` gives finite-difference operators on a grid of
//! spacing `δ` ([`ShiftOperator`]). Both realizations share spectra, and the
//! eigenfunctions correspond by `xᵏ ↦ x^{(k)}`. The [`spectral`] module
//! certifies that with exact characteristic polynomials.
//!
//! Everything is generic over [`Scalar`]; [`Rational`] is the exact default.

pub mod algebra;
pub mod error;
pub mod io;
pub mod operators;
pub mod oracles;
pub mod poly;
pub mod representations;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use algebra::{sl2_generator, AlgebraElement, Sl2Kind};
pub use error::{Error, Result};
pub use poly::Poly;
pub use representations::{BasisTag, GridStep, Polynomial, ShiftOperator};
pub use scalar::{ExactScalar, Scalar};

/// Arbitrary-precision exact rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational; overflows panic.
pub type Rational64 = num_rational::Rational64;

pub type QAlgebraElement = AlgebraElement<Rational>;
pub type QPoly = Poly<Rational>;
pub type QPolynomial = Polynomial<Rational>;
pub type QShiftOperator = ShiftOperator<Rational>;
pub type QGridStep = GridStep<Rational>;
