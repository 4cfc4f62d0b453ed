//! Combinatorial bridge: counting tilings of a 1 x n board with tiles of
//! length 1..k by exhaustive enumeration, and the sequence C those
//! counts match. The brute-force count deliberately shares no code with
//! the recurrence machinery it validates.

use crate::operator::OperatorExpr;
use crate::sequence::{basis, FibSequence};
use num_bigint::BigInt;
use num_traits::Zero;

/// A 1 x n board tiled with tiles of length 1..=k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingInstance {
    board_len: i64,
    max_tile: usize,
}

impl TilingInstance {
    /// Panics if the board length is negative or `k < 2`.
    pub fn new(board_len: i64, max_tile: usize) -> Self {
        assert!(board_len >= 0, "TilingInstance: negative board length {board_len}");
        assert!(max_tile >= 2, "TilingInstance: max tile length must be at least 2");
        Self { board_len, max_tile }
    }

    pub fn board_len(&self) -> i64 {
        self.board_len
    }

    pub fn max_tile(&self) -> usize {
        self.max_tile
    }
}

/// Number of tilings (ordered compositions of n into parts 1..=k) by
/// depth-first enumeration over the first tile. No memoization and no
/// recurrence: this is the independent oracle. Practical for n up to
/// about 25; the count for the empty board is 1.
pub fn count_tilings_bruteforce(inst: &TilingInstance) -> BigInt {
    fn walk(remaining: i64, max_tile: i64, count: &mut BigInt) {
        if remaining == 0 {
            *count += 1;
            return;
        }
        let mut first = 1;
        while first <= max_tile && first <= remaining {
            walk(remaining - first, max_tile, count);
            first += 1;
        }
    }
    let mut count = BigInt::zero();
    walk(inst.board_len, inst.max_tile as i64, &mut count);
    count
}

/// The tiling sequence C = L^(k-2)(B^(k-1)): the member of the order-k
/// space with C_0 = 0, C_1 = 1 and C_{-1} = ... = C_{-(k-2)} = 0, whose
/// term at n+1 counts the tilings of a board of length n.
pub fn c_sequence(k: usize) -> FibSequence {
    OperatorExpr::shift(k as i64 - 2).apply(&basis(k, k - 1))
}
