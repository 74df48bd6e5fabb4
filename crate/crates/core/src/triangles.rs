//! Integer triangles: Stirling numbers of both kinds (types A and B), Lah
//! numbers (types A and B) and their row sums.
//!
//! Each [`Family`] has a recurrence. A [`Triangle`] memoizes rows as they are
//! requested; the memo sits behind an `RwLock`, so a shared triangle can be
//! read from many threads and readers only ever see complete rows.
//!
//! The free functions (`stirling2_b`, `lah_b`, ...) go through process-wide
//! triangles and reject `k > n` with [`Error::OutOfRange`].

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `S_B(n,k) = S_B(n-1,k-1) + (2k+1) S_B(n-1,k)`, `S_B(n,0) = S_B(n,n) = 1`.
    Stirling2B,
    /// `c_B(n,k) = c_B(n-1,k-1) + (2n-1) c_B(n-1,k)`, `c_B(0,0) = 1`.
    Stirling1B,
    /// `s_B(n,k) = (-1)^(n-k) c_B(n,k)`.
    Stirling1SignedB,
    /// `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
    Stirling2A,
    /// `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
    Stirling1A,
    /// `s(n,k) = (-1)^(n-k) c(n,k)`.
    Stirling1SignedA,
    /// `L(n,k) = L(n-1,k-1) + (n-1+k) L(n-1,k)`.
    LahA,
    /// `L_B(n,k) = L_B(n-1,k-1) + 2(n+k) L_B(n-1,k)`.
    LahB,
    /// `(-1)^(n-k) L_B(n,k)`.
    LahSignedB,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Stirling2B,
        Family::Stirling1B,
        Family::Stirling1SignedB,
        Family::Stirling2A,
        Family::Stirling1A,
        Family::Stirling1SignedA,
        Family::LahA,
        Family::LahB,
        Family::LahSignedB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Stirling2B => "stirling2_B",
            Family::Stirling1B => "stirling1_signless_B",
            Family::Stirling1SignedB => "stirling1_signed_B",
            Family::Stirling2A => "stirling2_A",
            Family::Stirling1A => "stirling1_signless_A",
            Family::Stirling1SignedA => "stirling1_signed_A",
            Family::LahA => "lah_A",
            Family::LahB => "lah_B",
            Family::LahSignedB => "lah_signed_B",
        }
    }

    /// Row `n` computed from row `n - 1` (ignored for `n = 0`).
    fn next_row(self, n: usize, prev: &[BigInt]) -> Vec<BigInt> {
        if n == 0 {
            return vec![BigInt::one()];
        }
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let below = |k: usize| if k == 0 { BigInt::zero() } else { at(k - 1) };
        let n64 = n as u64;
        (0..=n)
            .map(|k| {
                let k64 = k as u64;
                match self {
                    Family::Stirling2B => {
                        if k == 0 || k == n {
                            BigInt::one()
                        } else {
                            below(k) + at(k) * (2 * k64 + 1)
                        }
                    }
                    Family::Stirling1B => below(k) + at(k) * (2 * n64 - 1),
                    Family::Stirling1SignedB => below(k) - at(k) * (2 * n64 - 1),
                    Family::Stirling2A => below(k) + at(k) * k64,
                    Family::Stirling1A => below(k) + at(k) * (n64 - 1),
                    Family::Stirling1SignedA => below(k) - at(k) * (n64 - 1),
                    Family::LahA => below(k) + at(k) * (n64 - 1 + k64),
                    Family::LahB => below(k) + at(k) * (2 * (n64 + k64)),
                    Family::LahSignedB => below(k) - at(k) * (2 * (n64 + k64)),
                }
            })
            .collect()
    }

    /// The process-wide memoized triangle for this family.
    pub fn shared(self) -> &'static Triangle {
        static SHARED: OnceLock<Vec<Triangle>> = OnceLock::new();
        let all = SHARED.get_or_init(|| Family::ALL.iter().map(|&f| Triangle::new(f)).collect());
        &all[Family::ALL
            .iter()
            .position(|&f| f == self)
            .expect("family listed in ALL")]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::unknown("triangle family", s))
    }
}

/// Lazily extended lower-triangular table of one [`Family`].
#[derive(Debug)]
pub struct Triangle {
    family: Family,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl Triangle {
    pub fn new(family: Family) -> Self {
        Triangle {
            family,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    fn ensure(&self, n: usize) {
        if self.rows.read().expect("triangle lock").len() > n {
            return;
        }
        let mut rows = self.rows.write().expect("triangle lock");
        while rows.len() <= n {
            let m = rows.len();
            let row = self
                .family
                .next_row(m, rows.last().map_or(&[][..], Vec::as_slice));
            rows.push(row);
        }
    }

    /// Entry `(n, k)`; errors unless `k <= n`.
    pub fn get(&self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Err(Error::OutOfRange { n, k });
        }
        Ok(self.entry(n, k))
    }

    /// Entry `(n, k)` with the zero convention outside `0 <= k <= n`.
    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.ensure(n);
        self.rows.read().expect("triangle lock")[n][k].clone()
    }

    pub fn row(&self, n: usize) -> Vec<BigInt> {
        self.ensure(n);
        self.rows.read().expect("triangle lock")[n].clone()
    }

    /// Rows `0..=n_max`.
    pub fn rows(&self, n_max: usize) -> Vec<Vec<BigInt>> {
        self.ensure(n_max);
        self.rows.read().expect("triangle lock")[..=n_max].to_vec()
    }

    /// Entries of rows `0, 1, 2, ...` read left to right, `len` of them.
    pub fn flattened(&self, len: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(len);
        let mut n = 0;
        while out.len() < len {
            out.extend(self.row(n));
            n += 1;
        }
        out.truncate(len);
        out
    }
}

/// Type-B Stirling number of the second kind `S_B(n, k)`.
pub fn stirling2_b(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling2B.shared().get(n, k)
}

/// Signless type-B Stirling number of the first kind `c_B(n, k)`.
pub fn stirling1_signless_b(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling1B.shared().get(n, k)
}

/// `s_B(n, k) = (-1)^(n-k) c_B(n, k)`.
pub fn stirling1_signed_b(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling1SignedB.shared().get(n, k)
}

pub fn stirling2_a(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling2A.shared().get(n, k)
}

pub fn stirling1_signless_a(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling1A.shared().get(n, k)
}

pub fn stirling1_signed_a(n: usize, k: usize) -> Result<BigInt> {
    Family::Stirling1SignedA.shared().get(n, k)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// Classical Lah number from `L(n, k) = n!/k! * binom(n-1, k-1)`, with
/// `L(0, 0) = 1` and `L(n, 0) = 0` for `n > 0`.
pub fn lah_a(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    if k == 0 {
        return Ok(if n == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    Ok(factorial(n) / factorial(k) * binomial(BigInt::from(n - 1), BigInt::from(k - 1)))
}

/// Independent ways of computing `L_B(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LahRoute {
    /// `binom(n,k)^2 2^(n-k) (n-k)!`
    ClosedForm,
    /// the memoized recurrence
    Recurrence,
    /// `sum_j c_B(n,j) S_B(j,k)`
    Convolution,
    /// `binom(n,k) (2n+1)_{n-k}^B`, i.e. `binom(n,k) * 2n (2n-2) ... (2k+2)`
    FallingFactorial,
}

impl LahRoute {
    pub const ALL: [LahRoute; 4] = [
        LahRoute::ClosedForm,
        LahRoute::Recurrence,
        LahRoute::Convolution,
        LahRoute::FallingFactorial,
    ];
}

/// Type-B Lah number `L_B(n, k)` by the chosen route.
pub fn lah_b(n: usize, k: usize, route: LahRoute) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    let binom = || binomial(BigInt::from(n), BigInt::from(k));
    Ok(match route {
        LahRoute::ClosedForm => {
            let b = binom();
            &b * &b * (BigInt::one() << (n - k)) * factorial(n - k)
        }
        LahRoute::Recurrence => Family::LahB.shared().entry(n, k),
        LahRoute::Convolution => {
            let c = Family::Stirling1B.shared();
            let s = Family::Stirling2B.shared();
            (k..=n).map(|j| c.entry(n, j) * s.entry(j, k)).sum()
        }
        LahRoute::FallingFactorial => {
            // (x-1)(x-3)...(x-2(n-k)+1) at x = 2n+1
            let x = 2 * n as u64 + 1;
            (1..=(n - k) as u64).fold(binom(), |acc, i| acc * (x - (2 * i - 1)))
        }
    })
}

/// Classical Lah-Bell number, the row sum of `L(n, k)`.
pub fn lah_bell_a(n: usize) -> BigInt {
    Family::LahA.shared().row(n).into_iter().sum()
}

/// Type-B Lah-Bell number, the row sum of `L_B(n, k)`.
pub fn lah_bell_b(n: usize) -> BigInt {
    Family::LahB.shared().row(n).into_iter().sum()
}

/// Whether `[a(n,j)] * [b(j,k)]` is the identity for `0 <= k <= n <= n_max`.
pub fn verify_inverse_pair(a: &Triangle, b: &Triangle, n_max: usize) -> bool {
    first_inverse_failure(a, b, n_max).is_none()
}

/// First `(n, k, product entry)` where the product is not the identity.
pub fn first_inverse_failure(
    a: &Triangle,
    b: &Triangle,
    n_max: usize,
) -> Option<(usize, usize, BigInt)> {
    for n in 0..=n_max {
        let row = a.row(n);
        for k in 0..=n {
            let sum: BigInt = (k..=n).map(|j| &row[j] * b.entry(j, k)).sum();
            let expected = if n == k {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if sum != expected {
                return Some((n, k, sum));
            }
        }
    }
    None
}
