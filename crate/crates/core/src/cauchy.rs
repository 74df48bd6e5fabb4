//! Cauchy numbers of the first and second kind, classical and type B.
//!
//! The first kind integrates a falling factorial over `[0, 1]`, the second
//! kind a rising factorial. Every number can be produced by four routes that
//! share no code beyond exact arithmetic:
//!
//! * [`Route::Integral`]: expand the factorial polynomial and integrate.
//! * [`Route::StirlingSum`]: `sum_k s(n,k) / (k+1)` with the matching
//!   first-kind Stirling triangle.
//! * [`Route::Recurrence`]: step `n -> n+1` from `x P_n = P_{n+1} + a_n P_n`.
//! * [`Route::Egf`]: `n! [x^n]` of the closed-form generating function,
//!   with the sign twist each closed form carries undone.
//!
//! Sign conventions of the closed forms:
//!
//! | sequence      | closed form                                         | generates            |
//! |---------------|-----------------------------------------------------|----------------------|
//! | first, A      | `x / ln(1+x)`                                       | `C_n`                |
//! | second, A     | `x / ((1+x) ln(1+x))`                               | `(-1)^n c_n`         |
//! | first, B      | `(1 - sqrt(1-2x)) / (sqrt(1-2x) ln sqrt(1-2x))`     | `(-1)^(n-1) C_n^B`   |
//! | second, B     | `(1 - sqrt(1-2x)) / ((2x-1) ln sqrt(1-2x))`         | `c_n^B`              |

use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{falling_a, falling_b, rising_a, rising_b};
use crate::triangles::Family;
use crate::{ratio, rational, Poly, Rational, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeTag {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Integral,
    StirlingSum,
    Recurrence,
    Egf,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Integral,
        Route::StirlingSum,
        Route::Recurrence,
        Route::Egf,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Route::Integral => "integral",
            Route::StirlingSum => "stirling_sum",
            Route::Recurrence => "recurrence",
            Route::Egf => "egf",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::unknown("route", s))
    }
}

/// The values `0..=n_max` of one Cauchy sequence, tagged with how they were
/// produced.
#[derive(Clone, Debug, PartialEq)]
pub struct CauchySequence {
    pub kind: Kind,
    pub type_tag: TypeTag,
    pub route: Route,
    pub values: Vec<Rational>,
}

impl CauchySequence {
    pub fn compute(kind: Kind, type_tag: TypeTag, route: Route, n_max: usize) -> Self {
        let values = match route {
            Route::Integral => integral_values(kind, type_tag, n_max),
            Route::StirlingSum => (0..=n_max)
                .map(|n| by_stirling_sum(kind, type_tag, n))
                .collect(),
            Route::Recurrence => by_recurrence(kind, type_tag, n_max),
            Route::Egf => by_egf(kind, type_tag, n_max),
        };
        CauchySequence {
            kind,
            type_tag,
            route,
            values,
        }
    }
}

fn sign(even: bool) -> Rational {
    if even {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integral-route values memoized per sequence, together with the last
/// factorial polynomial so the next one is a single linear-factor product.
struct IntegralMemo {
    poly: Poly,
    values: Vec<Rational>,
}

fn integral_memo(kind: Kind, type_tag: TypeTag) -> &'static Mutex<IntegralMemo> {
    static MEMOS: OnceLock<[Mutex<IntegralMemo>; 4]> = OnceLock::new();
    let memos = MEMOS.get_or_init(|| {
        std::array::from_fn(|_| {
            Mutex::new(IntegralMemo {
                poly: Poly::one(),
                values: vec![Rational::one()],
            })
        })
    });
    let idx = match (kind, type_tag) {
        (Kind::First, TypeTag::A) => 0,
        (Kind::Second, TypeTag::A) => 1,
        (Kind::First, TypeTag::B) => 2,
        (Kind::Second, TypeTag::B) => 3,
    };
    &memos[idx]
}

/// Root offset of the `i`-th linear factor (1-based) of the factorial.
fn factor_offset(kind: Kind, type_tag: TypeTag, i: usize) -> Rational {
    let i = i as i64;
    rational(match (kind, type_tag) {
        (Kind::First, TypeTag::A) => -(i - 1),
        (Kind::Second, TypeTag::A) => i - 1,
        (Kind::First, TypeTag::B) => -(2 * i - 1),
        (Kind::Second, TypeTag::B) => 2 * i - 1,
    })
}

fn integral_values(kind: Kind, type_tag: TypeTag, n_max: usize) -> Vec<Rational> {
    let mut memo = integral_memo(kind, type_tag).lock().expect("cauchy memo");
    while memo.values.len() <= n_max {
        let i = memo.values.len();
        let poly = &memo.poly * &Poly::linear(factor_offset(kind, type_tag, i));
        memo.values.push(poly.integrate01());
        memo.poly = poly;
    }
    memo.values[..=n_max].to_vec()
}

fn by_integral(kind: Kind, type_tag: TypeTag, n: usize) -> Rational {
    integral_values(kind, type_tag, n)
        .pop()
        .expect("n + 1 values")
}

/// Integral route without the memo, straight from the factorial polynomial.
pub fn integral_direct(kind: Kind, type_tag: TypeTag, n: usize) -> Rational {
    let p = match (kind, type_tag) {
        (Kind::First, TypeTag::A) => falling_a::<Rational>(n),
        (Kind::Second, TypeTag::A) => rising_a(n),
        (Kind::First, TypeTag::B) => falling_b(n),
        (Kind::Second, TypeTag::B) => rising_b(n),
    };
    p.integrate01()
}

/// The first-kind triangle whose rows expand the factorial polynomial:
/// signed for falling factorials, signless for rising ones.
fn expansion_family(kind: Kind, type_tag: TypeTag) -> Family {
    match (kind, type_tag) {
        (Kind::First, TypeTag::A) => Family::Stirling1SignedA,
        (Kind::Second, TypeTag::A) => Family::Stirling1A,
        (Kind::First, TypeTag::B) => Family::Stirling1SignedB,
        (Kind::Second, TypeTag::B) => Family::Stirling1B,
    }
}

/// `sum_k T(n,k) / (k + offset)` over the expansion triangle.
fn weighted_row_sum(kind: Kind, type_tag: TypeTag, n: usize, offset: usize) -> Rational {
    expansion_family(kind, type_tag)
        .shared()
        .row(n)
        .into_iter()
        .enumerate()
        .map(|(k, t)| Rational::new(t, BigInt::from(k + offset)))
        .sum()
}

fn by_stirling_sum(kind: Kind, type_tag: TypeTag, n: usize) -> Rational {
    weighted_row_sum(kind, type_tag, n, 1)
}

/// Step coefficient `a_n` with `x P_n = P_{n+1} + a_n P_n` (falling) or
/// `P_{n+1} = x P_n + a_n P_n` (rising).
fn step(type_tag: TypeTag, n: usize) -> Rational {
    match type_tag {
        TypeTag::A => rational(n as i64),
        TypeTag::B => rational(2 * n as i64 + 1),
    }
}

fn by_recurrence(kind: Kind, type_tag: TypeTag, n_max: usize) -> Vec<Rational> {
    let mut values = vec![Rational::one()];
    for n in 0..n_max {
        let rhs = weighted_row_sum(kind, type_tag, n, 2);
        let prev = values[n].clone() * step(type_tag, n);
        values.push(match kind {
            Kind::First => rhs - prev,
            Kind::Second => rhs + prev,
        });
    }
    values
}

fn by_egf(kind: Kind, type_tag: TypeTag, n_max: usize) -> Vec<Rational> {
    let series = closed_form_egf(kind, type_tag, n_max).expect("closed forms divide cleanly");
    series
        .egf_sequence()
        .into_iter()
        .enumerate()
        .map(|(n, v)| v * egf_sign(kind, type_tag, n))
        .collect()
}

/// Sign `e_n` such that `n! [x^n] closed_form = e_n * value_n`.
pub fn egf_sign(kind: Kind, type_tag: TypeTag, n: usize) -> Rational {
    match (kind, type_tag) {
        (Kind::First, TypeTag::A) | (Kind::Second, TypeTag::B) => Rational::one(),
        (Kind::Second, TypeTag::A) => sign(n.is_multiple_of(2)),
        // (-1)^(n-1), so -1 at n = 0
        (Kind::First, TypeTag::B) => sign(n % 2 == 1),
    }
}

/// `sqrt(1 - 2x)` and `ln sqrt(1 - 2x)` to the given order.
///
/// The logarithm is taken as `-ln((1-2x)^(-1/2))` so every intermediate is a
/// series with rational coefficients.
pub fn sqrt_and_log_sqrt(order: usize) -> Result<(Series, Series)> {
    let base = Series::new(vec![rational(1), rational(-2)], order);
    let sqrt = base.pow(&ratio(1, 2))?;
    let log_sqrt = -base.pow(&ratio(-1, 2))?.log1()?;
    Ok((sqrt, log_sqrt))
}

/// Closed-form exponential generating function, to `order`.
///
/// Both numerator and denominator vanish at 0; the division cancels the
/// common `x` so the inputs are built one order higher.
pub fn closed_form_egf(kind: Kind, type_tag: TypeTag, order: usize) -> Result<Series> {
    let work = order + 1;
    match type_tag {
        TypeTag::A => {
            let one_plus_x = Series::new(vec![rational(1), rational(1)], work);
            let log = one_plus_x.log1()?;
            let den = match kind {
                Kind::First => log,
                Kind::Second => &one_plus_x * &log,
            };
            Series::x(work).div(&den)
        }
        TypeTag::B => {
            let (sqrt, log_sqrt) = sqrt_and_log_sqrt(work)?;
            let num = &Series::one(work) - &sqrt;
            let den = match kind {
                Kind::First => &sqrt * &log_sqrt,
                Kind::Second => &Series::new(vec![rational(-1), rational(2)], work) * &log_sqrt,
            };
            num.div(&den)
        }
    }
}

fn single(kind: Kind, type_tag: TypeTag, n: usize, route: Route) -> Rational {
    match route {
        Route::Integral => by_integral(kind, type_tag, n),
        Route::StirlingSum => by_stirling_sum(kind, type_tag, n),
        Route::Recurrence | Route::Egf => CauchySequence::compute(kind, type_tag, route, n)
            .values
            .pop()
            .expect("n_max + 1 values"),
    }
}

/// Type-B Cauchy number of the first kind `C_n^B = int_0^1 (x)_n^B dx`.
pub fn cauchy_first_b(n: usize, route: Route) -> Rational {
    single(Kind::First, TypeTag::B, n, route)
}

/// Type-B Cauchy number of the second kind `c_n^B = int_0^1 [x]_n^B dx`.
pub fn cauchy_second_b(n: usize, route: Route) -> Rational {
    single(Kind::Second, TypeTag::B, n, route)
}

/// Classical `C_n = int_0^1 (x)_n dx`.
pub fn cauchy_first_a(n: usize) -> Rational {
    by_integral(Kind::First, TypeTag::A, n)
}

/// Classical `c_n = int_0^1 [x]_n dx`.
pub fn cauchy_second_a(n: usize) -> Rational {
    by_integral(Kind::Second, TypeTag::A, n)
}

pub fn cauchy_a(kind: Kind, n: usize, route: Route) -> Rational {
    single(kind, TypeTag::A, n, route)
}

/// `C_{n+1}^B + (2n+1) C_n^B = sum_k s_B(n,k) / (k+2)`, using integrals
/// for the Cauchy numbers.
pub fn check_recurrence_first_b(n: usize) -> bool {
    let lhs = cauchy_first_b(n + 1, Route::Integral)
        + step(TypeTag::B, n) * cauchy_first_b(n, Route::Integral);
    lhs == weighted_row_sum(Kind::First, TypeTag::B, n, 2)
}

/// `c_{n+1}^B - (2n+1) c_n^B = sum_k c_B(n,k) / (k+2)`.
pub fn check_recurrence_second_b(n: usize) -> bool {
    let lhs = cauchy_second_b(n + 1, Route::Integral)
        - step(TypeTag::B, n) * cauchy_second_b(n, Route::Integral);
    lhs == weighted_row_sum(Kind::Second, TypeTag::B, n, 2)
}

/// Both harmonic sums at `n`, `sum_k S_B(n,k) C_k^B` and
/// `sum_k S_B(n,k) (-1)^(n-k) c_k^B`.
pub fn harmonic_sums(n: usize) -> (Rational, Rational) {
    let row = Family::Stirling2B.shared().row(n);
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for (k, s) in row.into_iter().enumerate() {
        let s = Rational::from_integer(s);
        first += &s * cauchy_first_b(k, Route::Integral);
        second += s * sign((n - k).is_multiple_of(2)) * cauchy_second_b(k, Route::Integral);
    }
    (first, second)
}

/// Whether both harmonic sums equal `1 / (n + 1)`.
pub fn check_harmonic_identity(n: usize) -> bool {
    let target = ratio(1, n as i64 + 1);
    let (a, b) = harmonic_sums(n);
    a == target && b == target
}

/// `(sum_k L_B(n,k) C_k^B, sum_k (-1)^(n-k) L_B(n,k) c_k^B)`, which should be
/// `(c_n^B, C_n^B)`.
pub fn lah_inversion_sums(n: usize) -> (Rational, Rational) {
    let row = Family::LahB.shared().row(n);
    let mut to_second = Rational::zero();
    let mut to_first = Rational::zero();
    for (k, l) in row.into_iter().enumerate() {
        let l = Rational::from_integer(l);
        to_second += &l * cauchy_first_b(k, Route::Integral);
        to_first += l * sign((n - k).is_multiple_of(2)) * cauchy_second_b(k, Route::Integral);
    }
    (to_second, to_first)
}

pub fn check_lah_inversion(n: usize) -> bool {
    let (to_second, to_first) = lah_inversion_sums(n);
    to_second == cauchy_second_b(n, Route::Integral)
        && to_first == cauchy_first_b(n, Route::Integral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_kind_b_examples() {
        assert_eq!(cauchy_first_b(3, Route::Integral), ratio(-25, 4));
        assert_eq!(cauchy_first_b(6, Route::StirlingSum), ratio(81994, 21));
        for route in Route::ALL {
            assert_eq!(cauchy_first_b(0, route), rational(1), "{route}");
        }
    }

    #[test]
    fn second_kind_b_examples() {
        assert_eq!(cauchy_second_b(5, Route::Integral), ratio(13013, 6));
        assert_eq!(cauchy_second_b(2, Route::StirlingSum), ratio(16, 3));
        assert_eq!(cauchy_second_b(7, Route::Egf), ratio(2742975, 8));
    }

    #[test]
    fn classical_examples() {
        assert_eq!(cauchy_first_a(2), ratio(-1, 6));
        assert_eq!(cauchy_second_a(2), ratio(5, 6));
        assert_eq!(cauchy_first_a(0), rational(1));
        for route in Route::ALL {
            assert_eq!(
                cauchy_a(Kind::First, 4, route),
                cauchy_first_a(4),
                "{route}"
            );
            assert_eq!(
                cauchy_a(Kind::Second, 4, route),
                cauchy_second_a(4),
                "{route}"
            );
        }
    }

    #[test]
    fn recurrence_checks() {
        for n in [0, 1, 2, 5, 6] {
            assert!(check_recurrence_first_b(n), "first n={n}");
            assert!(check_recurrence_second_b(n), "second n={n}");
        }
    }

    #[test]
    fn harmonic() {
        assert_eq!(harmonic_sums(1), (ratio(1, 2), ratio(1, 2)));
        assert!(check_harmonic_identity(0));
        assert!(check_harmonic_identity(2));
        assert!(check_harmonic_identity(12));
    }

    #[test]
    fn lah_inversion() {
        assert_eq!(lah_inversion_sums(2).0, ratio(16, 3));
        assert!(check_lah_inversion(0));
        assert!(check_lah_inversion(2));
        assert!(check_lah_inversion(9));
    }

    #[test]
    fn closed_form_constant_terms() {
        let first = closed_form_egf(Kind::First, TypeTag::B, 5).unwrap();
        assert_eq!(first.order(), 5);
        assert_eq!(*first.constant_term(), rational(-1));
        let second = closed_form_egf(Kind::Second, TypeTag::B, 5).unwrap();
        assert_eq!(second.coeffs()[3], ratio(119, 24));
    }

    #[test]
    fn sequences_carry_their_route() {
        let s = CauchySequence::compute(Kind::Second, TypeTag::B, Route::Recurrence, 3);
        assert_eq!(s.route, Route::Recurrence);
        assert_eq!(
            s.values,
            [rational(1), ratio(3, 2), ratio(16, 3), ratio(119, 4)]
        );
    }

    #[test]
    fn memoized_integrals_match_direct_expansion() {
        for kind in [Kind::First, Kind::Second] {
            for type_tag in [TypeTag::A, TypeTag::B] {
                let seq = integral_values(kind, type_tag, 12);
                for (n, v) in seq.iter().enumerate() {
                    assert_eq!(*v, integral_direct(kind, type_tag, n));
                }
            }
        }
    }

    #[test]
    fn first_kind_b_signs_alternate() {
        let v = CauchySequence::compute(Kind::First, TypeTag::B, Route::Integral, 15).values;
        for (n, c) in v.iter().enumerate().skip(1) {
            assert_eq!(c < &Rational::zero(), n % 2 == 1, "n={n}");
        }
    }
}
