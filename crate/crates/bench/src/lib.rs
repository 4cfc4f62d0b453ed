//! Shared fixtures for the criterion benchmarks.

use fibspace::FibSequence;

/// A deterministic non-basis sequence of order k with small mixed-sign
/// initial values.
pub fn sample_sequence(k: usize) -> FibSequence {
    let window: Vec<i64> = (0..k as i64).map(|i| (i % 3) - 1 + (i % 2) * 3).collect();
    FibSequence::from_i64(k, &window)
}
