//! Values pinned by independent oracles: brute-force enumeration,
//! the generalized binomial theorem, direct integer products.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use typeb_core::cauchy::{cauchy_first_a, cauchy_second_a};
use typeb_core::triangles::{stirling1_signless_a, stirling1_signless_b, stirling2_a, stirling2_b};
use typeb_core::{ratio, rational, Rational, Series};

/// Number of set partitions of `{0..n}` into exactly `k` blocks, by
/// enumerating restricted growth strings.
fn partitions_into_blocks(n: usize, k: usize) -> u64 {
    fn go(i: usize, n: usize, used: usize, k: usize) -> u64 {
        if i == n {
            return (used == k) as u64;
        }
        (0..=used.min(k - 1))
            .map(|b| go(i + 1, n, used.max(b + 1), k))
            .sum()
    }
    if k == 0 {
        return (n == 0) as u64;
    }
    go(0, n, 0, k)
}

/// Permutations of `{0..n}` with exactly `k` cycles.
fn permutations_with_cycles(n: usize, k: usize) -> u64 {
    fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
        if start == items.len() {
            out.push(items.clone());
            return;
        }
        for i in start..items.len() {
            items.swap(start, i);
            permute(items, start + 1, out);
            items.swap(start, i);
        }
    }
    let mut all = Vec::new();
    permute(&mut (0..n).collect(), 0, &mut all);
    all.iter()
        .filter(|p| {
            let mut seen = vec![false; n];
            let mut cycles = 0;
            for s in 0..n {
                if !seen[s] {
                    cycles += 1;
                    let mut j = s;
                    while !seen[j] {
                        seen[j] = true;
                        j = p[j];
                    }
                }
            }
            cycles == k
        })
        .count() as u64
}

/// Coefficients of `(x+1)(x+3)...(x+2n-1)` with plain integer arithmetic.
fn rising_b_product(n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 1..=n {
        let a = BigInt::from(2 * i - 1);
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c * &a;
            next[k + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}

fn binom_rational(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| {
        acc * (a - rational(i as i64)) / rational(i as i64 + 1)
    })
}

#[test]
fn classical_stirling_from_enumeration() {
    for n in 0..=7 {
        for k in 0..=n {
            assert_eq!(
                stirling2_a(n, k).unwrap(),
                BigInt::from(partitions_into_blocks(n, k)),
                "S({n},{k})"
            );
            assert_eq!(
                stirling1_signless_a(n, k).unwrap(),
                BigInt::from(permutations_with_cycles(n, k)),
                "c({n},{k})"
            );
        }
    }
    assert_eq!(partitions_into_blocks(4, 2), 7);
    assert_eq!(permutations_with_cycles(4, 2), 11);
}

#[test]
fn type_b_first_kind_from_direct_product() {
    for n in 0..=12 {
        let row = rising_b_product(n);
        for (k, v) in row.iter().enumerate() {
            assert_eq!(&stirling1_signless_b(n, k).unwrap(), v);
        }
    }
}

/// Type-B set partitions (Reiner): partitions of {-n..n} symmetric under
/// negation with at most one block closed under negation (the zero block,
/// containing 0). S_B(n,k) counts those with k pairs of nonzero blocks.
fn type_b_partitions(n: usize, k: usize) -> u64 {
    // Assign each i in 1..=n to: the zero block, or to a nonzero block pair with a sign.
    // Encode nonzero blocks as restricted growth over pairs; the sign of the
    // first element placed in a pair is fixed positive (pairs are unordered {B, -B}).
    fn go(i: usize, n: usize, used: usize, k: usize) -> u64 {
        if i == n {
            return (used == k) as u64;
        }
        // zero block
        let mut total = go(i + 1, n, used, k);
        // existing pair, either sign
        for _ in 0..used {
            total += 2 * go(i + 1, n, used, k);
        }
        // new pair
        if used < k {
            total += go(i + 1, n, used + 1, k);
        }
        total
    }
    go(0, n, 0, k)
}

#[test]
fn type_b_second_kind_from_enumeration() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(
                stirling2_b(n, k).unwrap(),
                BigInt::from(type_b_partitions(n, k)),
                "S_B({n},{k})"
            );
        }
    }
}

#[test]
fn fractional_powers_match_binomial_series() {
    let base = Series::new(vec![rational(1), rational(-2)], 12);
    for e in [ratio(1, 2), ratio(-1, 2), ratio(3, 2), ratio(-5, 3)] {
        let s = base.pow(&e).unwrap();
        for n in 0..=12 {
            let expected = binom_rational(&e, n) * rational(-2).pow(n as i32);
            assert_eq!(s.coeffs()[n], expected, "e = {e}, n = {n}");
        }
    }
}

#[test]
fn inverse_sqrt_gives_double_factorials() {
    let s = Series::new(vec![rational(1), rational(-2)], 10)
        .pow(&ratio(-1, 2))
        .unwrap();
    let mut dfact = BigInt::one();
    for (n, v) in s.egf_sequence().into_iter().enumerate() {
        if n > 0 {
            dfact *= 2 * n - 1;
        }
        assert_eq!(v, Rational::from_integer(dfact.clone()));
    }
}

#[test]
fn classical_cauchy_from_integrals() {
    // int_0^1 x(x-1) = 1/3 - 1/2, int_0^1 x(x+1) = 1/3 + 1/2
    assert_eq!(cauchy_first_a(2), ratio(-1, 6));
    assert_eq!(cauchy_second_a(2), ratio(5, 6));
    // int_0^1 x(x-1)(x-2) = 1/4 - 1 + 1 = 1/4
    assert_eq!(cauchy_first_a(3), ratio(1, 4));
}

#[test]
fn exp_of_shifted_geometric_by_differential_recurrence() {
    // E' = s' E with s = x/(1-2x): s_n = 2^(n-1)
    let s = Series::from_fn(8, |n| {
        if n == 0 {
            rational(0)
        } else {
            rational(1 << (n - 1))
        }
    });
    let e = s.exp0().unwrap();
    assert_eq!(e.coeffs()[2], ratio(5, 2));
    // [x^3] = sum_k binom(2, k-1) 2^(3-k) / k! = 4 + 2 + 1/6
    assert_eq!(e.coeffs()[3], ratio(37, 6));
}
