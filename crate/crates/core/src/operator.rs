//! Shift and difference operators on two-sided sequences, represented as
//! finite integer-coefficient Laurent polynomials in the left shift L
//! (R = L^-1). Composition is polynomial multiplication; identities are
//! never compared as raw polynomials, only pointwise after application
//! to sequences of the space.

use crate::sequence::{basis, FibSequence};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

/// Σ c_m · L^m with finitely many nonzero integer coefficients; negative
/// exponents are right shifts. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<i64, BigInt>,
}

impl OperatorExpr {
    /// The zero operator (empty support).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity operator I.
    pub fn identity() -> Self {
        Self::shift(0)
    }

    /// L^m; m = 1 is the left shift L, m = -1 the right shift R.
    pub fn shift(m: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Self { terms }
    }

    /// The left shift L: (L X)_n = X_{n+1}.
    pub fn left_shift() -> Self {
        Self::shift(1)
    }

    /// The right shift R = L^-1: (R X)_n = X_{n-1}.
    pub fn right_shift() -> Self {
        Self::shift(-1)
    }

    /// Forward difference Δ = L - I.
    pub fn delta() -> Self {
        Self::from_terms([(1, 1), (0, -1)])
    }

    /// Backward difference ∇ = I - R.
    pub fn nabla() -> Self {
        Self::from_terms([(0, 1), (-1, -1)])
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents
    /// accumulate, zero coefficients are dropped.
    pub fn from_terms<C, E>(pairs: E) -> Self
    where
        C: Into<BigInt>,
        E: IntoIterator<Item = (i64, C)>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (m, c) in pairs {
            *terms.entry(m).or_default() += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// Coefficient of L^m (zero when absent).
    pub fn coefficient(&self, m: i64) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Support iterator in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &OperatorExpr) -> OperatorExpr {
        let mut terms = self.terms.clone();
        for (&m, c) in &other.terms {
            *terms.entry(m).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        OperatorExpr { terms }
    }

    pub fn sub(&self, other: &OperatorExpr) -> OperatorExpr {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> OperatorExpr {
        if factor.is_zero() {
            return OperatorExpr::zero();
        }
        let terms = self.terms.iter().map(|(&m, c)| (m, c * factor)).collect();
        OperatorExpr { terms }
    }

    /// Composition = Laurent-polynomial multiplication (operators in L
    /// commute).
    pub fn compose(&self, other: &OperatorExpr) -> OperatorExpr {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                *terms.entry(ma + mb).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        OperatorExpr { terms }
    }

    /// e-fold composition with itself; the identity for e = 0.
    pub fn pow(&self, e: u32) -> OperatorExpr {
        let mut acc = OperatorExpr::identity();
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// Apply to a sequence of the order-k space: Y_n = Σ c_m X_{n+m}.
    /// The result is constructed from its initial window, so it is again
    /// a member of the same space.
    pub fn apply(&self, seq: &FibSequence) -> FibSequence {
        let k = seq.order();
        if self.terms.is_empty() {
            return FibSequence::new(k, vec![BigInt::zero(); k]);
        }
        let min_m = *self.terms.keys().next().unwrap();
        let max_m = *self.terms.keys().next_back().unwrap();
        let inputs = seq.terms_range(min_m..=(k as i64 - 1 + max_m));
        let window = (0..k as i64)
            .map(|n| {
                let mut acc = BigInt::zero();
                for (&m, c) in &self.terms {
                    acc += c * &inputs[(n + m - min_m) as usize];
                }
                acc
            })
            .collect();
        FibSequence::new(k, window)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match m {
                0 => write!(f, "{c}·I")?,
                m if m > 0 => write!(f, "{c}·L^{m}")?,
                m => write!(f, "{c}·R^{}", -m)?,
            }
        }
        Ok(())
    }
}

/// One pointwise disagreement found while comparing two sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Index j of the basis sequence B^(j) being probed, when the
    /// comparison ranges over the standard basis.
    pub basis_index: Option<usize>,
    pub n: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.basis_index {
            Some(j) => write!(
                f,
                "B^({j}) at n = {}: lhs = {}, rhs = {}",
                self.n, self.lhs, self.rhs
            ),
            None => write!(f, "n = {}: lhs = {}, rhs = {}", self.n, self.lhs, self.rhs),
        }
    }
}

/// Outcome of a pointwise identity check.
#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    /// Number of (sequence, index) pairs compared.
    pub points_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }
}

/// Check lhs = rhs as operators restricted to the order-k space: apply
/// both to every basis sequence B^(0)..B^(k-1) and compare term values
/// over the index window. Agreement on the basis over any window implies
/// agreement on the whole space by linearity; mismatches are collected,
/// not thrown.
pub fn verify_identity(
    lhs: &OperatorExpr,
    rhs: &OperatorExpr,
    k: usize,
    window: RangeInclusive<i64>,
) -> IdentityReport {
    assert!(
        window.start() <= window.end(),
        "verify_identity: empty window"
    );
    let mut report = IdentityReport::default();
    for j in 0..k {
        let probe = basis(k, j);
        let left = lhs.apply(&probe).terms_range(window.clone());
        let right = rhs.apply(&probe).terms_range(window.clone());
        for (offset, (l, r)) in left.into_iter().zip(right).enumerate() {
            report.points_checked += 1;
            if l != r {
                report.mismatches.push(Mismatch {
                    basis_index: Some(j),
                    n: window.start() + offset as i64,
                    lhs: l,
                    rhs: r,
                });
            }
        }
    }
    report
}

/// Pointwise comparison of two concrete sequences over an index window.
pub fn compare_terms(
    lhs: &FibSequence,
    rhs: &FibSequence,
    window: RangeInclusive<i64>,
) -> IdentityReport {
    assert!(window.start() <= window.end(), "compare_terms: empty window");
    let mut report = IdentityReport::default();
    let left = lhs.terms_range(window.clone());
    let right = rhs.terms_range(window.clone());
    for (offset, (l, r)) in left.into_iter().zip(right).enumerate() {
        report.points_checked += 1;
        if l != r {
            report.mismatches.push(Mismatch {
                basis_index: None,
                n: window.start() + offset as i64,
                lhs: l,
                rhs: r,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::sum_basis;

    #[test]
    fn delta_is_left_shift_minus_identity() {
        let delta = OperatorExpr::left_shift().sub(&OperatorExpr::identity());
        assert_eq!(delta, OperatorExpr::delta());
        assert_eq!(delta.coefficient(1), BigInt::one());
        assert_eq!(delta.coefficient(0), BigInt::from(-1));
        assert_eq!(delta.coefficient(5), BigInt::zero());
    }

    #[test]
    fn left_and_right_shifts_cancel() {
        let composed = OperatorExpr::left_shift().compose(&OperatorExpr::right_shift());
        assert_eq!(composed, OperatorExpr::identity());
    }

    #[test]
    fn nabla_squared_expansion() {
        let squared = OperatorExpr::nabla().pow(2);
        assert_eq!(squared, OperatorExpr::from_terms([(0, 1), (-1, -2), (-2, 1)]));
    }

    #[test]
    fn left_shift_of_first_basis_is_last_basis() {
        for k in 2..=6 {
            let shifted = OperatorExpr::left_shift().apply(&basis(k, 0));
            assert_eq!(shifted, basis(k, k - 1), "k = {k}");
        }
    }

    #[test]
    fn identity_application_is_identity() {
        let seq = FibSequence::from_i64(4, &[3, -1, 4, 1]);
        assert_eq!(OperatorExpr::identity().apply(&seq), seq);
    }

    #[test]
    fn sum_difference_projects_onto_basis() {
        // (I - R^(j+1))(S) = (k-1) B^(j) at k = 3, j = 1.
        let projector = OperatorExpr::identity().sub(&OperatorExpr::shift(-2));
        let projected = projector.apply(&sum_basis(3));
        assert_eq!(projected, basis(3, 1).scale(&BigInt::from(2)));
    }

    #[test]
    fn verify_accepts_defining_recurrence() {
        // L^k = I + L + ... + L^(k-1) on the order-4 space.
        let lhs = OperatorExpr::shift(4);
        let rhs = OperatorExpr::from_terms((0..4).map(|m| (m, 1)));
        let report = verify_identity(&lhs, &rhs, 4, -15..=15);
        assert!(report.passed(), "{:?}", report.first_mismatch());
        assert_eq!(report.points_checked, 4 * 31);
    }

    #[test]
    fn verify_rejects_distinct_shifts() {
        let report = verify_identity(
            &OperatorExpr::left_shift(),
            &OperatorExpr::right_shift(),
            2,
            -5..=5,
        );
        assert!(!report.passed());
        let first = report.first_mismatch().unwrap();
        assert_eq!(first.basis_index, Some(0));
        assert_ne!(first.lhs, first.rhs);
    }

    #[test]
    fn scaled_rational_identity_stays_integral() {
        // (k+1)-scaled form of Σ C(k+1, i+1) (k-1-2i)/(k+1) Δ^i = 0 at k = 3.
        let k = 3i64;
        let mut lhs = OperatorExpr::zero();
        for i in 0..=k {
            let coeff = crate::genbinom::classical_binomial((k + 1) as u64, (i + 1) as u64)
                * BigInt::from(k - 1 - 2 * i);
            lhs = lhs.add(&OperatorExpr::delta().pow(i as u32).scale(&coeff));
        }
        let report = verify_identity(&lhs, &OperatorExpr::zero(), 3, -12..=12);
        assert!(report.passed(), "{:?}", report.first_mismatch());
    }

    #[test]
    fn zero_operator_annihilates() {
        let seq = FibSequence::from_i64(3, &[5, 0, -2]);
        let image = OperatorExpr::zero().apply(&seq);
        assert!(image.window().iter().all(|v| v.is_zero()));
    }
}
