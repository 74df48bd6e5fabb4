use std::fmt::Debug;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::Num;

/// Coefficient field for series and polynomials.
///
/// Exact work uses [`BigRational`]; the float impls exist so the same code
/// can be evaluated numerically.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_int(i64::try_from(n).expect("integer fits in i64"))
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
}
