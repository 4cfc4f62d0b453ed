//! Named catalog of shift-operator identities on the order-k space and
//! basis/sum relations, all machine-checkable pointwise.
//!
//! Operator relations are compared by applying both sides to every
//! standard-basis sequence; basis/sum relations compare two concrete
//! sequences. Relations with a rational factor are cleared of
//! denominators first so every comparison stays in exact integers.

use crate::genbinom::classical_binomial;
use crate::operator::{compare_terms, verify_identity, IdentityReport, OperatorExpr};
use crate::sequence::{basis, sum_basis, FibSequence};
use num_bigint::BigInt;
use std::ops::RangeInclusive;

/// A single checkable identity instance at a fixed order k.
#[derive(Debug, Clone)]
pub struct Identity {
    /// Stable identifier, e.g. `operator.v` or `basis_sum.vii[j=2]`.
    pub id: String,
    /// Human-readable statement of what is compared.
    pub statement: String,
    pub check: IdentityCheck,
}

/// What a catalog entry compares.
#[derive(Debug, Clone)]
pub enum IdentityCheck {
    /// lhs = rhs as operators restricted to the space (probed on the
    /// standard basis).
    Operators { lhs: OperatorExpr, rhs: OperatorExpr },
    /// lhs = rhs as concrete sequences.
    Sequences { lhs: FibSequence, rhs: FibSequence },
}

impl Identity {
    /// Run the check over an index window.
    pub fn verify(&self, k: usize, window: RangeInclusive<i64>) -> IdentityReport {
        match &self.check {
            IdentityCheck::Operators { lhs, rhs } => verify_identity(lhs, rhs, k, window),
            IdentityCheck::Sequences { lhs, rhs } => compare_terms(lhs, rhs, window),
        }
    }
}

/// Σ_{m=lo..=hi} coeff(m) · L^(sign·m) helper.
fn shift_sum(range: RangeInclusive<i64>, mut coeff: impl FnMut(i64) -> i64, sign: i64) -> OperatorExpr {
    OperatorExpr::from_terms(range.map(|m| (sign * m, coeff(m))))
}

/// The ten operator relations at order k, as (lhs, rhs) pairs. The
/// relation with the rational factor (k-1-2i)/(k+1) is multiplied
/// through by k+1; scaling by a nonzero integer preserves the
/// zero-operator property.
fn operator_relations(k: usize) -> Vec<(String, String, OperatorExpr, OperatorExpr)> {
    let ki = k as i64;
    let mut out = Vec::new();

    out.push((
        "operator.i".into(),
        format!("L^{k} = I + L + ... + L^{}", k - 1),
        OperatorExpr::shift(ki),
        shift_sum(0..=ki - 1, |_| 1, 1),
    ));

    out.push((
        "operator.ii".into(),
        format!("R = -I - L - ... - L^{} + L^{}", k - 2, k - 1),
        OperatorExpr::right_shift(),
        shift_sum(0..=ki - 2, |_| -1, 1).add(&OperatorExpr::shift(ki - 1)),
    ));

    out.push((
        "operator.iii".into(),
        format!("R^{k} = I - R - ... - R^{}", k - 1),
        OperatorExpr::shift(-ki),
        shift_sum(1..=ki - 1, |_| -1, -1).add(&OperatorExpr::identity()),
    ));

    out.push((
        "operator.iv".into(),
        format!("L = I + R + ... + R^{}", k - 1),
        OperatorExpr::left_shift(),
        shift_sum(0..=ki - 1, |_| 1, -1),
    ));

    out.push((
        "operator.v".into(),
        format!("L^{} = 2 L^{k} - I", k + 1),
        OperatorExpr::shift(ki + 1),
        OperatorExpr::from_terms([(ki, 2), (0, -1)]),
    ));

    out.push((
        "operator.vi".into(),
        format!("R^{} = 2 R - I", k + 1),
        OperatorExpr::shift(-(ki + 1)),
        OperatorExpr::from_terms([(-1, 2), (0, -1)]),
    ));

    // I + (k-1)R + (k-2)R^2 + ... + R^(k-1)
    let ramp_one = shift_sum(1..=ki - 1, |m| ki - m, -1).add(&OperatorExpr::identity());
    out.push((
        "operator.vii".into(),
        format!("Δ(I + {}R + ... + R^{}) = {}I", k - 1, k - 1, k - 1),
        OperatorExpr::delta().compose(&ramp_one),
        OperatorExpr::identity().scale(&BigInt::from(ki - 1)),
    ));

    // kI + (k-1)R + ... + R^(k-1)
    let ramp_full = shift_sum(0..=ki - 1, |m| ki - m, -1);
    out.push((
        "operator.viii".into(),
        format!("∇({k}I + {}R + ... + R^{}) = {}I", k - 1, k - 1, k - 1),
        OperatorExpr::nabla().compose(&ramp_full),
        OperatorExpr::identity().scale(&BigInt::from(ki - 1)),
    ));

    let mut alternating_delta = OperatorExpr::zero();
    for i in 0..=ki {
        let coeff = classical_binomial((ki + 1) as u64, (i + 1) as u64)
            * BigInt::from(ki - 1 - 2 * i);
        alternating_delta =
            alternating_delta.add(&OperatorExpr::delta().pow(i as u32).scale(&coeff));
    }
    out.push((
        "operator.ix".into(),
        format!("Σ C({},i+1)(({k}-1-2i)/({k}+1))Δ^i = 0, cleared of the denominator {}", k + 1, k + 1),
        alternating_delta,
        OperatorExpr::zero(),
    ));

    let mut alternating_nabla = OperatorExpr::identity().scale(&BigInt::from(ki - 1));
    for i in 1..=ki {
        let mut coeff = classical_binomial((ki + 1) as u64, (i + 1) as u64);
        if i % 2 == 1 {
            coeff = -coeff;
        }
        alternating_nabla =
            alternating_nabla.add(&OperatorExpr::nabla().pow(i as u32).scale(&coeff));
    }
    out.push((
        "operator.x".into(),
        format!("({}I) + Σ C({},i+1)(-1)^i ∇^i = 0", k - 1, k + 1),
        alternating_nabla,
        OperatorExpr::zero(),
    ));

    out
}

/// The seven basis/sum relations at order k, expanded over their j
/// families, as concrete sequence pairs. Fractional relations are
/// cleared of denominators: (I - R^(j+1))(S) is compared against
/// (k-1)·B^(j), and ∇(S) against (k-1)·B^(0).
fn basis_sum_relations(k: usize) -> Vec<(String, String, FibSequence, FibSequence)> {
    let sum = sum_basis(k);
    let first = basis(k, 0);
    let last = basis(k, k - 1);
    let ki = k as i64;
    let mut out = Vec::new();

    for j in 1..k {
        out.push((
            format!("basis_sum.i[j={j}]"),
            format!("B^({j}) - B^({}) = R^{j}(B^(0))", j - 1),
            basis(k, j).sub(&basis(k, j - 1)),
            OperatorExpr::shift(-(j as i64)).apply(&first),
        ));
    }

    for j in 0..k {
        out.push((
            format!("basis_sum.ii[j={j}]"),
            format!("B^({j}) = Σ_i R^i(B^(0)), i = 0..{j}"),
            basis(k, j),
            shift_sum(0..=j as i64, |_| 1, -1).apply(&first),
        ));
    }

    out.push((
        "basis_sum.iii.a".into(),
        "B^(0) = R(B^(k-1))".into(),
        first.clone(),
        OperatorExpr::right_shift().apply(&last),
    ));
    out.push((
        "basis_sum.iii.b".into(),
        "B^(k-1) = L(B^(0))".into(),
        last.clone(),
        OperatorExpr::left_shift().apply(&first),
    ));

    for j in 0..k {
        out.push((
            format!("basis_sum.iv[j={j}]"),
            format!("B^({j}) = Σ_i R^(i+1)(B^(k-1)), i = 0..{j}"),
            basis(k, j),
            shift_sum(1..=j as i64 + 1, |_| 1, -1).apply(&last),
        ));
    }

    out.push((
        "basis_sum.v".into(),
        format!("S = ({k}I + {}R + ... + R^{})(B^(0))", k - 1, k - 1),
        sum.clone(),
        shift_sum(0..=ki - 1, |m| ki - m, -1).apply(&first),
    ));

    out.push((
        "basis_sum.vi".into(),
        format!("∇(S) = {}B^(0)", k - 1),
        OperatorExpr::nabla().apply(&sum),
        first.scale(&BigInt::from(ki - 1)),
    ));

    for j in 0..k {
        out.push((
            format!("basis_sum.vii[j={j}]"),
            format!("(I - R^{})(S) = {}B^({j})", j + 1, k - 1),
            OperatorExpr::identity()
                .sub(&OperatorExpr::shift(-(j as i64 + 1)))
                .apply(&sum),
            basis(k, j).scale(&BigInt::from(ki - 1)),
        ));
    }

    out
}

/// The full identity catalog at order k: the ten operator relations and
/// the seven basis/sum relations (j-indexed families expanded).
pub fn catalog(k: usize) -> Vec<Identity> {
    build_catalog(k, false)
}

/// Test hook: same catalog with one coefficient of the first relation
/// deliberately flipped, so drivers can prove they detect and locate a
/// failure.
pub fn catalog_with_injected_fault(k: usize) -> Vec<Identity> {
    build_catalog(k, true)
}

fn build_catalog(k: usize, inject_fault: bool) -> Vec<Identity> {
    assert!(k >= 2, "catalog: order must be at least 2, got {k}");
    let mut out = Vec::new();
    for (index, (id, statement, lhs, mut rhs)) in operator_relations(k).into_iter().enumerate() {
        if inject_fault && index == 0 {
            rhs = rhs.add(&OperatorExpr::identity());
        }
        out.push(Identity {
            id,
            statement,
            check: IdentityCheck::Operators { lhs, rhs },
        });
    }
    for (id, statement, lhs, rhs) in basis_sum_relations(k) {
        out.push(Identity {
            id,
            statement,
            check: IdentityCheck::Sequences { lhs, rhs },
        });
    }
    out
}
