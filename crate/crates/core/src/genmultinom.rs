//! Generalized multinomial ⟨(i_1, ..., i_t)⟩ for arbitrary integer tuples,
//! plus enumeration of the finite nonzero support of multinomial sums
//! constrained to a fixed total.
//!
//! The multinomial is defined as the product of generalized binomials
//! along the suffix-sum chain of the tuple:
//! ⟨(i_1, ..., i_t)⟩ = ∏_j ⟨s_j choose s_{j+1}⟩ with s_j = i_j + ... + i_t.
//! A term is nonzero exactly when the chain is monotone nonincreasing
//! inside one sign class: s_1 >= ... >= s_t >= 0, or -1 >= s_1 >= ... >= s_t.

use crate::genbinom::{factorial, gen_binomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Argument tuple (i_1, ..., i_t) of the generalized multinomial, t >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    entries: Vec<i64>,
}

impl MultiIndex {
    /// Panics if fewer than two entries are given.
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(
            entries.len() >= 2,
            "MultiIndex: arity must be at least 2, got {}",
            entries.len()
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// Suffix partial sums s_j = i_j + ... + i_t, j = 1..t.
    pub fn suffix_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.entries.len()];
        let mut acc = 0i64;
        for (j, &e) in self.entries.iter().enumerate().rev() {
            acc += e;
            sums[j] = acc;
        }
        sums
    }
}

/// ⟨(i_1, ..., i_t)⟩ as the chain product of generalized binomials.
pub fn gen_multinomial(idx: &MultiIndex) -> BigInt {
    let sums = idx.suffix_sums();
    let mut acc = BigInt::one();
    for pair in sums.windows(2) {
        let factor = gen_binomial(pair[0], pair[1]);
        if factor.is_zero() {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// Classical multinomial (a_1 + ... + a_t)! / (a_1! ... a_t!), all a_j >= 0.
pub(crate) fn classical_multinomial(parts: &[i64]) -> BigInt {
    debug_assert!(parts.iter().all(|&p| p >= 0));
    let total: i64 = parts.iter().sum();
    let mut acc = factorial(total as u64);
    for &p in parts {
        acc /= factorial(p as u64);
    }
    acc
}

/// Second, independent evaluation of ⟨(i_1, ..., i_t)⟩ via the
/// three-case split:
///
/// - the classical multinomial when every entry is nonnegative,
/// - (-1)^(i_1+...+i_{t-1}) (i_1, ..., i_{t-1}, -i_1-...-i_t-1) when
///   the first t-1 entries are nonnegative and the total is <= -1,
/// - 0 otherwise.
pub fn gen_multinomial_closed(idx: &MultiIndex) -> BigInt {
    let entries = idx.entries();
    let head = &entries[..entries.len() - 1];
    let total: i64 = entries.iter().sum();
    if head.iter().all(|&e| e >= 0) {
        if entries[entries.len() - 1] >= 0 {
            return classical_multinomial(entries);
        }
        if total <= -1 {
            let mut parts: Vec<i64> = head.to_vec();
            parts.push(-total - 1);
            let value = classical_multinomial(&parts);
            let head_sum: i64 = head.iter().sum();
            return if head_sum.rem_euclid(2) == 0 { value } else { -value };
        }
    }
    BigInt::zero()
}

/// One nonzero term of a constrained multinomial sum, stored as its
/// suffix-sum chain (s_1, ..., s_k): monotone nonincreasing, entirely
/// nonnegative or entirely <= -1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportChain {
    sums: Vec<i64>,
}

impl SupportChain {
    pub fn partial_sums(&self) -> &[i64] {
        &self.sums
    }

    /// Recover the multinomial argument tuple: a_j = s_j - s_{j+1}, a_k = s_k.
    pub fn entries(&self) -> Vec<i64> {
        let k = self.sums.len();
        let mut a = Vec::with_capacity(k);
        for j in 0..k - 1 {
            a.push(self.sums[j] - self.sums[j + 1]);
        }
        a.push(self.sums[k - 1]);
        a
    }

    /// The multinomial value of this chain: ∏_j ⟨s_j choose s_{j+1}⟩.
    /// Nonzero by the chain invariant.
    pub fn term_value(&self) -> BigInt {
        let mut acc = BigInt::one();
        for pair in self.sums.windows(2) {
            acc *= gen_binomial(pair[0], pair[1]);
        }
        acc
    }
}

/// All chains (s_1, ..., s_k) with s_1 + ... + s_k = `target_sum` lying in
/// one of the two monotone sign classes, in descending lexicographic
/// order. The list is finite; an empty list is a valid result (e.g. any
/// target in -k+1..=-1).
pub fn enumerate_support(k: usize, target_sum: i64) -> Vec<SupportChain> {
    assert!(k >= 2, "enumerate_support: k must be at least 2, got {k}");
    let mut chains = Vec::new();

    if target_sum >= 0 {
        // Nonincreasing nonnegative tuples summing to target.
        let mut acc = Vec::with_capacity(k);
        descend_nonneg(k, target_sum, target_sum, &mut acc, &mut chains);
    } else {
        // Negative class via u_j = -s_j - 1 >= 0: u nondecreasing,
        // sum u = -target - k.
        let residue = -target_sum - k as i64;
        if residue >= 0 {
            let mut acc = Vec::with_capacity(k);
            ascend_residues(k, residue, 0, &mut acc, &mut chains);
        }
    }

    chains.sort_by(|a, b| b.cmp(a));
    chains
}

fn descend_nonneg(
    k: usize,
    remaining: i64,
    upper: i64,
    acc: &mut Vec<i64>,
    out: &mut Vec<SupportChain>,
) {
    if acc.len() == k {
        if remaining == 0 {
            out.push(SupportChain { sums: acc.clone() });
        }
        return;
    }
    let slots_left = (k - acc.len()) as i64;
    let mut s = upper.min(remaining);
    while s >= 0 && s * slots_left >= remaining {
        acc.push(s);
        descend_nonneg(k, remaining - s, s, acc, out);
        acc.pop();
        s -= 1;
    }
}

fn ascend_residues(
    k: usize,
    remaining: i64,
    lower: i64,
    acc: &mut Vec<i64>,
    out: &mut Vec<SupportChain>,
) {
    if acc.len() == k {
        if remaining == 0 {
            out.push(SupportChain {
                sums: acc.iter().map(|&u| -u - 1).collect(),
            });
        }
        return;
    }
    for u in lower..=remaining {
        acc.push(u);
        ascend_residues(k, remaining - u, u, acc, out);
        acc.pop();
    }
}
