//! Riordan arrays `(b(x), c(x))` with entries `[x^n] b(x) (x c(x))^k`.
//!
//! The named arrays all encode `(k!/n!) T(n,k)` for one of the integer
//! triangles; [`derive_cauchy_egf`] runs the summation property through the
//! type-B first-kind Stirling array to rebuild the Cauchy generating
//! functions and checks them against the closed forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::cauchy::{closed_form_egf, sqrt_and_log_sqrt, Kind, TypeTag};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::PowerSeries;
use crate::triangles::Family;
use crate::{rational, Rational, Series};

/// Default truncation order for [`named_array`].
pub const NAMED_ORDER: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct RiordanArray<T> {
    b: PowerSeries<T>,
    c: PowerSeries<T>,
    name: String,
}

impl<T: Scalar> RiordanArray<T> {
    /// Both series must have a nonzero constant term.
    pub fn new(b: PowerSeries<T>, c: PowerSeries<T>, name: impl Into<String>) -> Result<Self> {
        if b.constant_term().is_zero() || c.constant_term().is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(RiordanArray {
            b,
            c,
            name: name.into(),
        })
    }

    pub fn b(&self) -> &PowerSeries<T> {
        &self.b
    }

    pub fn c(&self) -> &PowerSeries<T> {
        &self.c
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Highest `n` for which entries are determined.
    pub fn order(&self) -> usize {
        self.b.order().min(self.c.order() + 1)
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: self.order(),
            });
        }
        Ok(())
    }

    /// `x c(x)` truncated to the array order.
    fn inner(&self) -> PowerSeries<T> {
        self.c.shift_up(1).truncate(self.order())
    }

    /// `[x^n] b(x) (x c(x))^k`; zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Result<T> {
        self.check_order(n)?;
        if k > n {
            return Ok(T::zero());
        }
        let col = self
            .b
            .truncate(n)
            .mul(&self.inner().truncate(n).powi(k as u32));
        Ok(col.coeffs()[n].clone())
    }

    /// Rows `0..=n_max` of the array (row `n` has `n + 1` entries).
    pub fn matrix(&self, n_max: usize) -> Result<Vec<Vec<T>>> {
        self.check_order(n_max)?;
        let inner = self.inner().truncate(n_max);
        let mut rows: Vec<Vec<T>> = (0..=n_max).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut col = self.b.truncate(n_max);
        for k in 0..=n_max {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeffs()[n].clone());
            }
            col = col.mul(&inner);
        }
        Ok(rows)
    }

    /// `[x^n] b(x) g(x c(x))`.
    pub fn summation(&self, g: &PowerSeries<T>, n: usize) -> Result<T> {
        Ok(self.summation_series(g, n)?.coeffs()[n].clone())
    }

    /// `b(x) g(x c(x))` through order `n`.
    pub fn summation_series(&self, g: &PowerSeries<T>, n: usize) -> Result<PowerSeries<T>> {
        self.check_order(n)?;
        if g.order() < n {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: g.order(),
            });
        }
        let composed = g.compose(&self.inner().truncate(n))?;
        Ok(self.b.truncate(n).mul(&composed))
    }
}

/// The arrays that encode `(k!/n!) T(n,k)` for a triangle `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedArray {
    /// `(1, (1/x) ln(1/(1-x)))`
    Stirling1A,
    /// `(1, (e^x - 1)/x)`
    Stirling2A,
    /// `(1/sqrt(1-2x), (1/x) ln(1/sqrt(1-2x)))`
    Stirling1B,
    /// `(1, 1/(1-x))`
    LahA,
    /// `(1/(1-2x), 1/(1-2x))`
    LahB,
}

impl NamedArray {
    pub const ALL: [NamedArray; 5] = [
        NamedArray::Stirling1A,
        NamedArray::Stirling2A,
        NamedArray::Stirling1B,
        NamedArray::LahA,
        NamedArray::LahB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            NamedArray::Stirling1A => "stirling1_A",
            NamedArray::Stirling2A => "stirling2_A",
            NamedArray::Stirling1B => "stirling1_B",
            NamedArray::LahA => "lah_A",
            NamedArray::LahB => "lah_B",
        }
    }

    /// The triangle `T` with `entry(n, k) = (k!/n!) T(n, k)`.
    pub fn family(self) -> Family {
        match self {
            NamedArray::Stirling1A => Family::Stirling1A,
            NamedArray::Stirling2A => Family::Stirling2A,
            NamedArray::Stirling1B => Family::Stirling1B,
            NamedArray::LahA => Family::LahA,
            NamedArray::LahB => Family::LahB,
        }
    }

    /// The array with entries determined through row `order`.
    pub fn build(self, order: usize) -> Result<RiordanArray<Rational>> {
        let one = rational(1);
        let (b, c) = match self {
            NamedArray::Stirling1A => {
                let log = Series::geometric(one.clone(), order + 1).log1()?;
                (Series::one(order), shifted_log(log)?)
            }
            NamedArray::Stirling2A => {
                let e = Series::exp(order + 1);
                (
                    Series::one(order),
                    (&e - &Series::one(order + 1)).shift_down(1)?,
                )
            }
            NamedArray::Stirling1B => {
                let base = Series::new(vec![one.clone(), rational(-2)], order + 1);
                let inv_sqrt = base.pow(&crate::ratio(-1, 2))?;
                let (_, log_sqrt) = sqrt_and_log_sqrt(order + 1)?;
                (inv_sqrt.truncate(order), shifted_log(-log_sqrt)?)
            }
            NamedArray::LahA => (Series::one(order), Series::geometric(one, order)),
            NamedArray::LahB => {
                let g = Series::geometric(rational(2), order);
                (g.clone(), g)
            }
        };
        RiordanArray::new(b, c, self.tag())
    }
}

/// `(1/x) log`, for a logarithm whose constant term must vanish.
fn shifted_log(log: Series) -> Result<Series> {
    debug_assert!(log.constant_term() == &rational(0));
    log.shift_down(1)
}

impl fmt::Display for NamedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for NamedArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedArray::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| Error::unknown("Riordan array", s))
    }
}

/// Named array by tag at [`NAMED_ORDER`].
pub fn named_array(tag: &str) -> Result<RiordanArray<Rational>> {
    tag.parse::<NamedArray>()?.build(NAMED_ORDER)
}

/// `g` for the summation route: `(e^y - 1)/y` for the second kind and
/// `(e^-y - 1)/y` for the first, i.e. `g_k = (+-1)^(k+1) / (k+1)!`.
pub fn cauchy_kernel(kind: Kind, order: usize) -> Series {
    let e = Series::exp(order + 1);
    Series::from_fn(order, |k| {
        let c = e.coeffs()[k + 1].clone();
        match kind {
            Kind::Second => c,
            Kind::First if k % 2 == 0 => -c,
            Kind::First => c,
        }
    })
}

/// Type-B Cauchy EGF through the summation property of the `c_B` array.
pub fn cauchy_egf_by_summation(kind: Kind, order: usize) -> Result<Series> {
    let array = NamedArray::Stirling1B.build(order)?;
    array.summation_series(&cauchy_kernel(kind, order), order)
}

/// Closed-form type-B Cauchy EGF, after checking coefficientwise that the
/// summation route produces the same series.
pub fn derive_cauchy_egf(kind: Kind, order: usize) -> Result<Series> {
    let closed = closed_form_egf(kind, TypeTag::B, order)?;
    let summed = cauchy_egf_by_summation(kind, order)?;
    for (n, (a, b)) in closed.coeffs().iter().zip(summed.coeffs()).enumerate() {
        if a != b {
            return Err(Error::RouteMismatch {
                what: "closed form and Riordan summation",
                n,
                left: a.to_string(),
                right: b.to_string(),
            });
        }
    }
    Ok(closed)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// `e^(x/(1-2x)) / (1-2x)`.
pub fn lah_bell_b_egf(order: usize) -> Result<Series> {
    let inv = Series::geometric(rational(2), order);
    let inner = Series::x(order).mul(&inv);
    Ok(inv.mul(&inner.exp0()?))
}

/// `e^(x/(1-x))`.
pub fn lah_bell_a_egf(order: usize) -> Result<Series> {
    Series::x(order)
        .mul(&Series::geometric(rational(1), order))
        .exp0()
}

/// `(x/(1-x))^k / k!`, the column-`k` EGF of the classical Lah numbers.
pub fn lah_a_column_egf(k: usize, order: usize) -> Series {
    let base = Series::x(order).mul(&Series::geometric(rational(1), order));
    base.powi(k as u32)
        .scale(&Rational::new(BigInt::one(), factorial(k)))
}

/// `x^k / ((1-2x)^(k+1) k!)`, the column-`k` EGF of `L_B`.
pub fn lah_b_column_egf(k: usize, order: usize) -> Series {
    Series::monomial(Rational::new(BigInt::one(), factorial(k)), k, order)
        .mul(&Series::geometric(rational(2), order).powi(k as u32 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn entries() {
        let lah = NamedArray::LahB.build(10).unwrap();
        assert_eq!(lah.entry(2, 1).unwrap(), rational(4));
        let cb = named_array("stirling1_B").unwrap();
        assert_eq!(cb.entry(3, 1).unwrap(), ratio(23, 6));
        assert_eq!(cb.entry(0, 0).unwrap(), rational(1));
        assert_eq!(cb.entry(3, 5).unwrap(), rational(0));
    }

    #[test]
    fn entry_needs_enough_order() {
        let lah = NamedArray::LahB.build(4).unwrap();
        assert_eq!(
            lah.entry(5, 1),
            Err(Error::InsufficientOrder {
                needed: 5,
                available: 4
            })
        );
    }

    #[test]
    fn summations() {
        let cb = NamedArray::Stirling1B.build(10).unwrap();
        let one = Series::one(10);
        for n in 0..=10 {
            assert_eq!(cb.summation(&one, n).unwrap(), cb.b().coeffs()[n]);
        }
        assert_eq!(
            cb.summation(&cauchy_kernel(Kind::Second, 10), 1).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(
            cb.summation(&cauchy_kernel(Kind::First, 10), 2).unwrap(),
            ratio(-2, 3)
        );
        assert!(cb.summation(&Series::one(1), 2).is_err());
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            named_array("stirling2_A").unwrap().entry(4, 2).unwrap(),
            ratio(7, 12)
        );
        assert_eq!(
            named_array("lah_A").unwrap().entry(3, 2).unwrap(),
            rational(2)
        );
        let cb = named_array("stirling1_B").unwrap();
        // (2n-1)!! / n!
        let mut dfact = 1i64;
        let mut fact = 1i64;
        for n in 0..=10i64 {
            if n > 0 {
                dfact *= 2 * n - 1;
                fact *= n;
            }
            assert_eq!(cb.entry(n as usize, 0).unwrap(), ratio(dfact, fact));
        }
        assert!(named_array("stirling3_B").is_err());
    }

    #[test]
    fn matrix_matches_entries() {
        let a = NamedArray::Stirling2A.build(8).unwrap();
        let m = a.matrix(8).unwrap();
        for (n, row) in m.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(*v, a.entry(n, k).unwrap());
            }
        }
        assert_eq!(m.len(), 9);
    }

    #[test]
    fn derived_egfs() {
        let second = derive_cauchy_egf(Kind::Second, 8).unwrap();
        assert_eq!(second.coeffs()[0], rational(1));
        assert_eq!(second.coeffs()[3], ratio(119, 24));
        let first = derive_cauchy_egf(Kind::First, 8).unwrap();
        assert_eq!(first.coeffs()[0], rational(-1));
    }

    #[test]
    fn proper_arrays_only() {
        assert!(RiordanArray::new(Series::x(3), Series::one(3), "bad").is_err());
    }
}
