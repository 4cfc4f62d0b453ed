//! Exact arithmetic for the k-dimensional linear space of two-sided
//! Fibonacci sequences of order k (F_n = F_{n-1} + ... + F_{n-k} for all
//! n in Z, negative indices included).
//!
//! The crate provides:
//!
//! - [`genbinom`]: the generalized binomial coefficient ⟨n choose i⟩,
//!   defined for *all* integer n and i by the Pascal recursion and the
//!   diagonal condition ⟨n choose n⟩ = 1.
//! - [`genmultinom`]: the generalized multinomial ⟨(i_1, ..., i_t)⟩ and
//!   enumeration of the finite nonzero support of constrained
//!   multinomial sums.
//! - [`sequence`]: two-directional term evaluation (sliding window,
//!   two-term shortcut, companion-matrix power), the standard basis
//!   B^(0)..B^(k-1), and the linear-combination decomposition.
//! - [`operator`]: shift/difference operators as integer Laurent
//!   polynomials in the left shift L, applied exactly to sequences.
//! - [`identities`]: the named catalog of shift-operator and basis-sum
//!   identities, verified pointwise on basis sequences.
//! - [`formulas`]: closed-form evaluators for S_n and B^(j)_n based on
//!   generalized binomials and generalized multinomials, each checked
//!   against the recurrence oracle.
//! - [`tiling`]: brute-force tiling counts of a 1 x n board with tiles
//!   of length 1..k and the combinatorial sequence C they match.
//! - [`suite`]: the full verification suite driven by the CLI.
//!
//! All scalar values are exact [`BigInt`]s; indices are `i64`.

pub mod formulas;
pub mod genbinom;
pub mod genmultinom;
pub mod identities;
pub mod operator;
pub mod sequence;
pub mod suite;
pub mod tiling;

pub use num_bigint::BigInt;

pub use genbinom::{binom_table, falling_factorial, gen_binomial, gen_binomial_signed_form};
pub use genmultinom::{
    enumerate_support, gen_multinomial, gen_multinomial_closed, MultiIndex, SupportChain,
};
pub use operator::{verify_identity, IdentityReport, Mismatch, OperatorExpr};
pub use sequence::{basis, sum_basis, EvalMethod, FibSequence};
pub use tiling::{c_sequence, count_tilings_bruteforce, TilingInstance};
