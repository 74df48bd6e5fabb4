//! Exact computation of the classical and type-B Stirling, Cauchy, Lah and
//! Lah-Bell numbers.
//!
//! Everything is computed over exact rationals (or big integers for the
//! integer triangles) so that tables and identities can be compared with zero
//! tolerance. The series and polynomial machinery is generic over a
//! [`Scalar`]; the aliases below fix it to [`Rational`], which is what the
//! rest of the crate uses.

pub mod cauchy;
pub mod error;
pub mod poly;
pub mod riordan;
pub mod scalar;
pub mod series;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision integer used for every triangle entry.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision reduced fraction; the coefficient field.
pub type Rational = num_rational::BigRational;

/// Truncated power series over exact rationals.
pub type Series = series::PowerSeries<Rational>;
/// Polynomial over exact rationals.
pub type Poly = poly::Polynomial<Rational>;
/// Riordan array over exact rationals.
pub type Riordan = riordan::RiordanArray<Rational>;

/// Floating-point series, handy for quick numeric sanity checks.
pub type SeriesF64 = series::PowerSeries<f64>;
/// Floating-point polynomial.
pub type PolyF64 = poly::Polynomial<f64>;

/// Shorthand for building an exact rational `num/den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Exact rational from an integer.
pub fn rational(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}
