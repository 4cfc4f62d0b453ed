//! Verification suite: runs the identity catalog, the formula-vs-oracle
//! grid, the Pascal-recursion boxes, and the tiling bridge, producing a
//! deterministic pass/fail report with a located first counterexample
//! for every failing check.

use crate::formulas::{basis_binomial, basis_multinomial, s_closed, s_split_range};
use crate::genbinom::gen_binomial;
use crate::genmultinom::{gen_multinomial, MultiIndex};
use crate::identities;
use crate::sequence::{basis, sum_basis};
use crate::tiling::{c_sequence, count_tilings_bruteforce, TilingInstance};
use std::fmt;
use std::ops::RangeInclusive;

/// Configuration for one verification run. Defaults match the
/// acceptance-scale ranges.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Orders checked by the identity catalog, the formula grid and the
    /// tiling bridge (the bridge is capped at order 5).
    pub k_range: RangeInclusive<usize>,
    /// Index grid for the formula-vs-oracle checks.
    pub n_range: RangeInclusive<i64>,
    /// Index window for pointwise identity verification.
    pub identity_window: RangeInclusive<i64>,
    /// Box half-width B for the binomial Pascal recursion on [-B, B]^2.
    pub pascal_box: i64,
    /// Largest board length for the tiling bridge.
    pub tiling_max_len: i64,
    /// Test hook: flip one coefficient in the identity catalog to prove
    /// the driver detects and locates failures.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            k_range: 2..=6,
            n_range: -40..=60,
            identity_window: -20..=20,
            pascal_box: 30,
            tiling_max_len: 14,
            inject_fault: false,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First counterexample, when the check failed.
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, counterexample: None }
    }

    fn fail(name: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            counterexample: Some(counterexample.into()),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "pass  {}", self.name)
        } else {
            write!(
                f,
                "FAIL  {} ({})",
                self.name,
                self.counterexample.as_deref().unwrap_or("no counterexample")
            )
        }
    }
}

/// Full report of a verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

/// Run every check family under one configuration.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.results.extend(check_identity_catalog(cfg));
    report.results.extend(check_formula_grid(cfg));
    report.results.extend(check_pascal_recursions(cfg));
    report.results.extend(check_tiling_bridge(cfg));
    report
}

/// (a) The operator/basis-sum identity catalog, pointwise on every basis
/// sequence.
pub fn check_identity_catalog(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for k in cfg.k_range.clone() {
        let entries = if cfg.inject_fault {
            identities::catalog_with_injected_fault(k)
        } else {
            identities::catalog(k)
        };
        for identity in entries {
            let name = format!("identity k={k} {}: {}", identity.id, identity.statement);
            let outcome = identity.verify(k, cfg.identity_window.clone());
            match outcome.first_mismatch() {
                None => out.push(CheckResult::pass(name)),
                Some(m) => out.push(CheckResult::fail(name, m.to_string())),
            }
        }
    }
    out
}

/// (b) Closed formulas against the recurrence oracle on the (k, j, n)
/// grid, and both S formulas against term(sum_basis).
pub fn check_formula_grid(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for k in cfg.k_range.clone() {
        let s = sum_basis(k);
        let s_oracle = s.terms_range(cfg.n_range.clone());
        let lo = *cfg.n_range.start();
        let mut sum_failure = None;
        for (offset, want) in s_oracle.iter().enumerate() {
            let n = lo + offset as i64;
            let closed = s_closed(k, n);
            let split = s_split_range(k, n);
            if closed != *want || split != *want {
                sum_failure =
                    Some(format!("n = {n}: closed = {closed}, split = {split}, oracle = {want}"));
                break;
            }
        }
        out.push(match sum_failure {
            None => CheckResult::pass(format!("formulas k={k} S: closed = split = oracle")),
            Some(c) => CheckResult::fail(format!("formulas k={k} S: closed = split = oracle"), c),
        });

        for j in 0..k {
            let oracle = basis(k, j).terms_range(cfg.n_range.clone());
            let mut failure = None;
            for (offset, want) in oracle.iter().enumerate() {
                let n = lo + offset as i64;
                let via_binomial = basis_binomial(k, j, n);
                let via_multinomial = basis_multinomial(k, j, n);
                if via_binomial != *want || via_multinomial != *want {
                    failure = Some(format!(
                        "n = {n}: binomial = {via_binomial}, multinomial = {via_multinomial}, oracle = {want}"
                    ));
                    break;
                }
            }
            let name = format!("formulas k={k} B^({j}): binomial = multinomial = oracle");
            out.push(match failure {
                None => CheckResult::pass(name),
                Some(c) => CheckResult::fail(name, c),
            });
        }
    }
    out
}

/// (c) Pascal recursions: the binomial recursion on the configured box
/// and the multinomial recursion on a fixed arity-3 box.
pub fn check_pascal_recursions(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let b = cfg.pascal_box;
    let mut binom_failure = None;
    'outer: for n in -b..=b {
        for i in -b..=b {
            let lhs = gen_binomial(n - 1, i) + gen_binomial(n - 1, i - 1);
            let rhs = gen_binomial(n, i);
            if lhs != rhs {
                binom_failure = Some(format!("(n, i) = ({n}, {i}): {lhs} != {rhs}"));
                break 'outer;
            }
        }
    }
    let binom = match binom_failure {
        None => CheckResult::pass(format!("pascal binomial box [-{b}, {b}]^2")),
        Some(c) => CheckResult::fail(format!("pascal binomial box [-{b}, {b}]^2"), c),
    };

    let m = 5i64.min(b);
    let mut multi_failure = None;
    'scan: for i1 in -m..=m {
        for i2 in -m..=m {
            for i3 in -m..=m {
                let value = gen_multinomial(&MultiIndex::new(vec![i1, i2, i3]));
                let expanded = gen_multinomial(&MultiIndex::new(vec![i1 - 1, i2, i3]))
                    + gen_multinomial(&MultiIndex::new(vec![i1, i2 - 1, i3]))
                    + gen_multinomial(&MultiIndex::new(vec![i1, i2, i3 - 1]));
                if value != expanded {
                    multi_failure =
                        Some(format!("(i1, i2, i3) = ({i1}, {i2}, {i3}): {value} != {expanded}"));
                    break 'scan;
                }
            }
        }
    }
    let multi = match multi_failure {
        None => CheckResult::pass(format!("pascal multinomial box [-{m}, {m}]^3")),
        Some(c) => CheckResult::fail(format!("pascal multinomial box [-{m}, {m}]^3"), c),
    };

    vec![binom, multi]
}

/// (d) Brute-force tiling counts against term(C, n+1).
pub fn check_tiling_bridge(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let k_lo = *cfg.k_range.start();
    let k_hi = (*cfg.k_range.end()).min(5);
    for k in k_lo..=k_hi {
        let c = c_sequence(k);
        let mut failure = None;
        for n in 0..=cfg.tiling_max_len {
            let counted = count_tilings_bruteforce(&TilingInstance::new(n, k));
            let predicted = c.term(n + 1);
            if counted != predicted {
                failure = Some(format!("n = {n}: brute force = {counted}, C_(n+1) = {predicted}"));
                break;
            }
        }
        let name = format!("tiling bridge k={k}, boards 0..={}", cfg.tiling_max_len);
        out.push(match failure {
            None => CheckResult::pass(name),
            Some(c) => CheckResult::fail(name, c),
        });
    }
    out
}
