//! Polynomials in one variable and the factorial bases.
//!
//! Coefficients are indexed by degree, ascending. Besides the monomial basis
//! there are four factorial bases, all monic with `P_k` of degree `k`:
//!
//! | basis        | `P_k(x)`                              |
//! |--------------|---------------------------------------|
//! | `FallingA`   | `x (x - 1) ... (x - k + 1)`           |
//! | `RisingA`    | `x (x + 1) ... (x + k - 1)`           |
//! | `FallingB`   | `(x - 1) (x - 3) ... (x - 2k + 1)`    |
//! | `RisingB`    | `(x + 1) (x + 3) ... (x + 2k - 1)`    |
//!
//! Conversion into a basis is a triangular solve against the expanded basis
//! polynomials; it never consults the number triangles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    // no trailing zeros; the zero polynomial is empty
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x + a`.
    pub fn linear(a: T) -> Self {
        Self::new(vec![a, T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &T) -> Self {
        let lin = Self::linear(c.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &lin) + &Self::constant(a.clone())
        })
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| f(self.coeff(k), rhs.coeff(k))).collect())
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }

    /// Exact value of the integral over `[0, 1]`: `sum_k a_k / (k + 1)`.
    pub fn integrate01(&self) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, c)| {
                acc + c.clone() / T::from_usize(k + 1)
            })
    }

    /// Coefficients of `self` in `basis`, indexed by `k` (length `degree + 1`).
    pub fn to_basis(&self, basis: Basis) -> Vec<T> {
        let n = self.degree();
        if basis == Basis::Monomial {
            return (0..=n).map(|k| self.coeff(k)).collect();
        }
        let polys = basis_polys::<T>(basis, n);
        let mut rest = self.coeffs.clone();
        rest.resize(n + 1, T::zero());
        let mut out = vec![T::zero(); n + 1];
        // every basis polynomial is monic, so peel off the top degree each step
        for k in (0..=n).rev() {
            let c = rest[k].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in polys[k].coeffs.iter().enumerate() {
                rest[j] = rest[j].clone() - c.clone() * b.clone();
            }
            out[k] = c;
        }
        out
    }

    /// `sum_k coeffs[k] P_k(x)` expanded in the monomial basis.
    pub fn from_basis(coeffs: &[T], basis: Basis) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        let polys = basis_polys::<T>(basis, coeffs.len() - 1);
        coeffs
            .iter()
            .zip(&polys)
            .fold(Self::zero(), |acc, (c, p)| &acc + &p.scale(c))
    }
}

/// Basis of the polynomial ring used by [`Polynomial::to_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    FallingA,
    RisingA,
    FallingB,
    RisingB,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::FallingA,
        Basis::RisingA,
        Basis::FallingB,
        Basis::RisingB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::FallingA => "falling_A",
            Basis::RisingA => "rising_A",
            Basis::FallingB => "falling_B",
            Basis::RisingB => "rising_B",
        }
    }

    /// The `k`-th basis polynomial.
    pub fn poly<T: Scalar>(self, k: usize) -> Polynomial<T> {
        match self {
            Basis::Monomial => Polynomial::monomial(T::one(), k),
            Basis::FallingA => falling_a(k),
            Basis::RisingA => rising_a(k),
            Basis::FallingB => falling_b(k),
            Basis::RisingB => rising_b(k),
        }
    }

    /// Root offset of the `i`-th linear factor (1-based): `P_k = prod (x + offset(i))`.
    fn offset(self, i: usize) -> i64 {
        let i = i as i64;
        match self {
            Basis::Monomial => 0,
            Basis::FallingA => -(i - 1),
            Basis::RisingA => i - 1,
            Basis::FallingB => -(2 * i - 1),
            Basis::RisingB => 2 * i - 1,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| Error::unknown("basis", s))
    }
}

/// `P_0 ..= P_n` of a basis, built incrementally.
fn basis_polys<T: Scalar>(basis: Basis, n: usize) -> Vec<Polynomial<T>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut p = Polynomial::one();
    out.push(p.clone());
    for i in 1..=n {
        p = &p * &Polynomial::linear(T::from_int(basis.offset(i)));
        out.push(p.clone());
    }
    out
}

fn factor_product<T: Scalar>(basis: Basis, n: usize) -> Polynomial<T> {
    basis_polys(basis, n).pop().unwrap_or_else(Polynomial::one)
}

/// `(x)_n^B = (x - 1)(x - 3) ... (x - 2n + 1)`.
pub fn falling_b<T: Scalar>(n: usize) -> Polynomial<T> {
    factor_product(Basis::FallingB, n)
}

/// `[x]_n^B = (x + 1)(x + 3) ... (x + 2n - 1)`.
pub fn rising_b<T: Scalar>(n: usize) -> Polynomial<T> {
    factor_product(Basis::RisingB, n)
}

/// `(x)_n = x (x - 1) ... (x - n + 1)`.
pub fn falling_a<T: Scalar>(n: usize) -> Polynomial<T> {
    factor_product(Basis::FallingA, n)
}

/// `[x]_n = x (x + 1) ... (x + n - 1)`.
pub fn rising_a<T: Scalar>(n: usize) -> Polynomial<T> {
    factor_product(Basis::RisingA, n)
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.product(rhs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, rational, Poly, Rational};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rational(c)).collect())
    }

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| rational(c)).collect()
    }

    #[test]
    fn type_b_falling() {
        assert_eq!(falling_b::<Rational>(0), Poly::one());
        assert_eq!(falling_b::<Rational>(2), p(&[3, -4, 1]));
        assert_eq!(falling_b::<Rational>(3), p(&[-15, 23, -9, 1]));
    }

    #[test]
    fn type_b_rising() {
        assert_eq!(rising_b::<Rational>(0), Poly::one());
        assert_eq!(rising_b::<Rational>(2), p(&[3, 4, 1]));
        assert_eq!(rising_b::<Rational>(4), p(&[105, 176, 86, 16, 1]));
    }

    #[test]
    fn classical_factorials() {
        assert_eq!(falling_a::<Rational>(2), p(&[0, -1, 1]));
        assert_eq!(rising_a::<Rational>(2), p(&[0, 1, 1]));
        assert_eq!(falling_a::<Rational>(0), Poly::one());
    }

    #[test]
    fn integrals_over_unit_interval() {
        assert_eq!(falling_b::<Rational>(2).integrate01(), ratio(4, 3));
        assert_eq!(rising_b::<Rational>(3).integrate01(), ratio(119, 4));
        assert_eq!(Poly::one().integrate01(), rational(1));
        assert_eq!(Poly::zero().integrate01(), rational(0));
    }

    #[test]
    fn conversions() {
        let cube = Poly::monomial(rational(1), 3);
        assert_eq!(cube.to_basis(Basis::FallingB), ints(&[1, 13, 9, 1]));
        assert_eq!(
            rising_b::<Rational>(2).to_basis(Basis::FallingB),
            ints(&[8, 8, 1])
        );
        assert_eq!(
            Poly::monomial(rational(1), 2).to_basis(Basis::Monomial),
            ints(&[0, 0, 1])
        );
    }

    #[test]
    fn reconstructions() {
        let mut unit = vec![rational(0); 5];
        unit[4] = rational(1);
        assert_eq!(Poly::from_basis(&unit, Basis::FallingB), falling_b(4));
        assert_eq!(
            Poly::from_basis(&ints(&[3, -4, 1]), Basis::Monomial),
            falling_b(2)
        );
        // signed Lah row 2 over the rising basis
        assert_eq!(
            Poly::from_basis(&ints(&[8, -8, 1]), Basis::RisingB),
            falling_b(2)
        );
        assert_eq!(Poly::from_basis(&[], Basis::RisingA), Poly::zero());
    }

    #[test]
    fn shift_and_eval() {
        // rising_B(n)(x) = falling_B(n)(x + 2n)
        for n in 0..8 {
            let shifted = falling_b::<Rational>(n).shift(&rational(2 * n as i64));
            assert_eq!(shifted, rising_b(n));
        }
        assert_eq!(p(&[1, 2, 3]).eval(&rational(2)), rational(17));
    }

    #[test]
    fn basis_tags_round_trip() {
        for b in Basis::ALL {
            assert_eq!(b.tag().parse::<Basis>().unwrap(), b);
        }
        assert!("chebyshev".parse::<Basis>().is_err());
    }

    #[test]
    fn zero_is_normalized() {
        let z = &p(&[1, 2]) - &p(&[1, 2]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        assert_eq!(z.to_basis(Basis::RisingB), ints(&[0]));
    }
}
