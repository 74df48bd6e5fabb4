//! Truncated formal power series.
//!
//! A [`PowerSeries`] stores the coefficients of `x^0 ..= x^order`; anything
//! above `order` is unknown (not zero). Every operation returns a series whose
//! order never exceeds what its inputs actually determine:
//!
//! * `+`, `-`, `*`: the smaller of the two operand orders.
//! * [`PowerSeries::div`]: the smaller operand order minus the valuation of
//!   the divisor (the common power of `x` is cancelled first).
//! * [`PowerSeries::compose`]: limited by the inner order and by how many
//!   outer coefficients the inner valuation lets through.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default truncation order when none is given.
pub const DEFAULT_ORDER: usize = 64;

/// Environment variable that overrides [`DEFAULT_ORDER`].
pub const ORDER_ENV: &str = "TYPEB_SERIES_ORDER";

/// [`DEFAULT_ORDER`], unless [`ORDER_ENV`] holds a valid order.
pub fn default_order() -> usize {
    std::env::var(ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<T> {
    // len == order + 1, never empty
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Builds a series of the given order, padding `coeffs` with zeros or
    /// dropping the excess.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least x^0");
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c x^k`; zero if `k > order`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The indeterminate `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// `1 / (1 - r x)`.
    pub fn geometric(r: T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = T::one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p = p * r.clone();
        }
        PowerSeries { coeffs }
    }

    /// `sum x^n / n!`.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = T::one();
        for n in 0..=order {
            if n > 0 {
                c = c / T::from_usize(n);
            }
            coeffs.push(c.clone());
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^n`.
    pub fn coefficient(&self, n: usize) -> Result<&T> {
        self.coeffs.get(n).ok_or(Error::IndexBeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, `None` if all known
    /// coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops coefficients above `order`. No-op when `order >= self.order()`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// Divides by `x^k`; the first `k` coefficients must vanish and the order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientOrder {
                needed: k,
                available: self.order(),
            });
        }
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(Error::HigherValuationDivisor {
                    dividend: v,
                    divisor: k,
                });
            }
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Formal derivative. The order drops by one (an order-0 series has no
    /// known derivative coefficients beyond the constant, which is reported
    /// as zero of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.clone() * T::from_usize(n))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_usize(n + 1));
        }
        PowerSeries { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs }
    }

    /// `self^k` by repeated squaring; `k = 0` gives 1 at the same order.
    pub fn powi(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient `q` with `q * rhs = self`.
    ///
    /// When `rhs` has valuation `v > 0`, `x^v` is cancelled from both sides
    /// first, so removable singularities such as `x / ln(1 + x)` divide
    /// cleanly. The result order is `min(self.order(), rhs.order()) - v`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let v = rhs.valuation().ok_or(Error::ZeroDivisor)?;
        let order = self.order().min(rhs.order());
        if v > order {
            // only possible when the dividend is shorter than the divisor's valuation
            return Err(Error::InsufficientOrder {
                needed: v,
                available: order,
            });
        }
        if let Some(u) = self.valuation() {
            if u < v {
                return Err(Error::HigherValuationDivisor {
                    dividend: u,
                    divisor: v,
                });
            }
        }
        let num = &self.coeffs[v..=order];
        let den = &rhs.coeffs[v..=order];
        let lead = &den[0];
        let mut q: Vec<T> = Vec::with_capacity(num.len());
        for n in 0..num.len() {
            let mut acc = num[n].clone();
            for j in 1..=n {
                if !den[j].is_zero() {
                    acc = acc - den[j].clone() * q[n - j].clone();
                }
            }
            q.push(acc / lead.clone());
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<Self> {
        if self.constant_term().is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::one(self.order()).div(self)
    }

    /// `outer(inner(x))`.
    ///
    /// With inner valuation `v`, coefficient `n` of the result needs outer
    /// coefficients up to `n / v`, so the result order is
    /// `min(inner.order(), (outer.order() + 1) * v - 1)`. A zero inner series
    /// leaves only the outer constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantInner);
        }
        let order = match inner.valuation() {
            None => return Ok(Self::constant(self.coeffs[0].clone(), inner.order())),
            Some(v) => inner.order().min((self.order() + 1) * v - 1),
        };
        let v = inner.valuation().unwrap_or(1);
        let inner = inner.truncate(order);
        let top = self.order().min(order / v);
        // Horner: f_top, then acc * g + f_k down to k = 0
        let mut acc = Self::constant(self.coeffs[top].clone(), order);
        for k in (0..top).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Logarithm of a series with constant term 1: `L` with `L(0) = 0` and
    /// `L' = s' / s`.
    pub fn log1(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(self
            .derivative()
            .div(&self.truncate(self.order() - 1))?
            .integral())
    }

    /// Exponential of a series with constant term 0, from `E' = s' E`:
    /// `n E_n = sum_{k=1}^{n} k s_k E_{n-k}`.
    pub fn exp0(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let order = self.order();
        let weighted: Vec<T> = (0..=order)
            .map(|k| self.coeffs[k].clone() * T::from_usize(k))
            .collect();
        let mut e: Vec<T> = Vec::with_capacity(order + 1);
        e.push(T::one());
        for n in 1..=order {
            let mut acc = T::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc = acc + weighted[k].clone() * e[n - k].clone();
                }
            }
            e.push(acc / T::from_usize(n));
        }
        Ok(PowerSeries { coeffs: e })
    }

    /// `self^e = exp(e log self)` for a series with constant term 1.
    pub fn pow(&self, e: &T) -> Result<Self> {
        self.log1()?.scale(e).exp0()
    }

    /// `n! [x^n]` for `n = 0..=order`: the sequence this series is the
    /// exponential generating function of.
    pub fn egf_sequence(&self) -> Vec<T> {
        let mut fact = T::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * T::from_usize(n);
                }
                c.clone() * fact.clone()
            })
            .collect()
    }

    /// Inverse of [`egf_sequence`](Self::egf_sequence): the series
    /// `sum a_n x^n / n!`.
    pub fn from_egf(values: &[T]) -> Self {
        let mut fact = T::one();
        let coeffs = values
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    fact = fact.clone() * T::from_usize(n);
                }
                a.clone() / fact.clone()
            })
            .collect();
        Self::from_coeffs(coeffs)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Scalar> $trait<&PowerSeries<T>> for &PowerSeries<T> {
            type Output = PowerSeries<T>;
            fn $method(self, rhs: &PowerSeries<T>) -> PowerSeries<T> {
                PowerSeries::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        PowerSeries {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

impl<T: Scalar> Neg for PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(mut self) -> PowerSeries<T> {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}
