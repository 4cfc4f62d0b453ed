//! Generalized binomial coefficient ⟨n choose i⟩ for all integers n, i.
//!
//! The generalization is pinned down by two conditions: ⟨n choose n⟩ = 1
//! for every n, and the Pascal recursion
//! ⟨n-1 choose i⟩ + ⟨n-1 choose i-1⟩ = ⟨n choose i⟩.
//! The unique solution is ⟨n choose i⟩ = n(n-1)...(i+1)/(n-i)! when
//! n >= i and 0 otherwise; its support is the two wedges n >= i >= 0 and
//! -1 >= n >= i.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::ops::RangeInclusive;

/// Falling factorial n^(m) = n(n-1)...(n-m+1); the empty product for m = 0.
///
/// Panics if `m < 0`.
pub fn falling_factorial(n: i64, m: i64) -> BigInt {
    assert!(m >= 0, "falling_factorial: m must be nonnegative, got {m}");
    let mut acc = BigInt::one();
    for t in 0..m {
        acc *= BigInt::from(n as i128 - t as i128);
    }
    acc
}

pub(crate) fn factorial(m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=m {
        acc *= BigInt::from(t);
    }
    acc
}

/// The generalized binomial ⟨n choose i⟩, total on all integer pairs.
///
/// Single source of truth: the falling-factorial closed form. The product
/// n(n-1)...(i+1) is always divisible by (n-i)!; the division is asserted
/// exact.
pub fn gen_binomial(n: i64, i: i64) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    let m = i64::try_from(n as i128 - i as i128)
        .expect("gen_binomial: n - i does not fit in i64");
    let numerator = falling_factorial(n, m);
    let denominator = factorial(m as u64);
    let rem = &numerator % &denominator;
    assert!(rem.is_zero(), "gen_binomial({n}, {i}): inexact division");
    numerator / denominator
}

/// Classical binomial C(n, r) for 0 <= r <= n, by the multiplicative
/// formula with stepwise exact division. Kept separate from
/// [`gen_binomial`] so the signed-form cross-check does not share its
/// code path.
pub(crate) fn classical_binomial(n: u64, r: u64) -> BigInt {
    assert!(r <= n, "classical_binomial: r > n");
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for t in 1..=r {
        acc *= BigInt::from(n - r + t);
        acc /= BigInt::from(t);
    }
    acc
}

/// Second, independent evaluation of ⟨n choose i⟩ via the signed
/// three-case split:
///
/// - classical C(n, i) when n >= i >= 0,
/// - (-1)^(i+n) C(-i-1, -n-1) when -1 >= n >= i,
/// - 0 otherwise.
pub fn gen_binomial_signed_form(n: i64, i: i64) -> BigInt {
    if n >= i && i >= 0 {
        classical_binomial(n as u64, i as u64)
    } else if -1 >= n && n >= i {
        let value = classical_binomial((-i - 1) as u64, (-n - 1) as u64);
        if (i + n).rem_euclid(2) == 0 {
            value
        } else {
            -value
        }
    } else {
        BigInt::zero()
    }
}

/// Matrix of ⟨n choose i⟩ over inclusive index ranges: `table[r][c]`
/// holds the value at the r-th n and c-th i, both enumerated ascending.
pub fn binom_table(
    n_range: RangeInclusive<i64>,
    i_range: RangeInclusive<i64>,
) -> Vec<Vec<BigInt>> {
    assert!(
        n_range.start() <= n_range.end() && i_range.start() <= i_range.end(),
        "binom_table: empty range"
    );
    n_range
        .map(|n| i_range.clone().map(|i| gen_binomial(n, i)).collect())
        .collect()
}
