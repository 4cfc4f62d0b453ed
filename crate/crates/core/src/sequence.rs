//! The k-dimensional linear space of two-sided order-k Fibonacci
//! sequences: construction from an initial window, exact term evaluation
//! in both index directions with three interchangeable strategies, the
//! standard basis, and the linear-combination decomposition.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::VecDeque;
use std::fmt;
use std::ops::RangeInclusive;

/// Term-evaluation strategy selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    /// Sliding window of the k most recent values; k-term sum per step.
    Window,
    /// Two-term recursion F_n = 2 F_{n-1} - F_{n-k-1} (and its mirror
    /// F_n = 2 F_{n+k} - F_{n+k+1} going backward).
    Shortcut,
    /// Companion-matrix exponentiation, O(k^3 log |n|) bigint multiplies.
    MatrixPower,
}

impl EvalMethod {
    pub const ALL: [EvalMethod; 3] =
        [EvalMethod::Window, EvalMethod::Shortcut, EvalMethod::MatrixPower];

    pub fn name(self) -> &'static str {
        match self {
            EvalMethod::Window => "window",
            EvalMethod::Shortcut => "shortcut",
            EvalMethod::MatrixPower => "matpow",
        }
    }
}

/// A point of the order-k Fibonacci space: the order k together with the
/// initial window (F_0, ..., F_{k-1}). All other terms, at negative
/// indices included, are determined by F_n = F_{n-1} + ... + F_{n-k}.
///
/// Immutable; freely shareable across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSequence {
    k: usize,
    window: Vec<BigInt>,
}

impl FibSequence {
    /// Panics if `k < 2` or the window length differs from `k`.
    pub fn new(k: usize, window: Vec<BigInt>) -> Self {
        assert!(k >= 2, "FibSequence: order must be at least 2, got {k}");
        assert_eq!(
            window.len(),
            k,
            "FibSequence: initial window must have length k = {k}"
        );
        Self { k, window }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(k: usize, window: &[i64]) -> Self {
        Self::new(k, window.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// The initial window (F_0, ..., F_{k-1}).
    pub fn window(&self) -> &[BigInt] {
        &self.window
    }

    /// F_n by the selected strategy.
    pub fn term_with(&self, method: EvalMethod, n: i64) -> BigInt {
        match method {
            EvalMethod::Window => self.term(n),
            EvalMethod::Shortcut => self.term_shortcut(n),
            EvalMethod::MatrixPower => self.term_matrix_power(n),
        }
    }

    /// F_n by walking the defining recurrence with a sliding window of
    /// the k most recent values: forward F_n = F_{n-1} + ... + F_{n-k},
    /// backward F_{n-k} = F_n - F_{n-1} - ... - F_{n-k+1}.
    pub fn term(&self, n: i64) -> BigInt {
        let k = self.k as i64;
        if (0..k).contains(&n) {
            return self.window[n as usize].clone();
        }
        if n >= k {
            // buf holds F_{m-k} ..= F_{m-1}
            let mut buf: VecDeque<BigInt> = self.window.iter().cloned().collect();
            for _ in k..=n {
                let next: BigInt = buf.iter().sum();
                buf.pop_front();
                buf.push_back(next);
            }
            buf.pop_back().unwrap()
        } else {
            // buf holds F_m ..= F_{m+k-1}
            let mut buf: VecDeque<BigInt> = self.window.iter().cloned().collect();
            for _ in n..0 {
                let mut prev = buf.back().unwrap().clone();
                for v in buf.iter().take(self.k - 1) {
                    prev -= v;
                }
                buf.pop_back();
                buf.push_front(prev);
            }
            buf.pop_front().unwrap()
        }
    }

    /// F_n by the two-term shortcut recursion: two ring operations per
    /// step instead of k - 1. Forward steps use F_n = 2 F_{n-1} - F_{n-k-1};
    /// backward steps use F_n = 2 F_{n+k} - F_{n+k+1}.
    pub fn term_shortcut(&self, n: i64) -> BigInt {
        let k = self.k as i64;
        if (0..k).contains(&n) {
            return self.window[n as usize].clone();
        }
        // Seed F_0 ..= F_k (one full-width sum), then slide.
        let mut buf: VecDeque<BigInt> = self.window.iter().cloned().collect();
        buf.push_back(buf.iter().sum());
        if n >= k {
            if n == k {
                return buf.pop_back().unwrap();
            }
            // buf holds F_{m-k-1} ..= F_{m-1}
            for _ in (k + 1)..=n {
                let next = buf.back().unwrap() * 2 - buf.front().unwrap();
                buf.pop_front();
                buf.push_back(next);
            }
            buf.pop_back().unwrap()
        } else {
            // buf holds F_{m+1} ..= F_{m+k+1}
            for _ in n..0 {
                let prev = &buf[self.k - 1] * 2 - &buf[self.k];
                buf.pop_back();
                buf.push_front(prev);
            }
            buf.pop_front().unwrap()
        }
    }

    /// F_n by k x k integer companion-matrix exponentiation. The inverse
    /// companion matrix is also integral (the backward recurrence has
    /// integer coefficients), so negative indices need no rational
    /// arithmetic.
    pub fn term_matrix_power(&self, n: i64) -> BigInt {
        let k = self.k as i64;
        if (0..k).contains(&n) {
            return self.window[n as usize].clone();
        }
        let matrix = if n >= 0 {
            Matrix::companion_forward(self.k)
        } else {
            Matrix::companion_backward(self.k)
        };
        let power = matrix.pow(n.unsigned_abs());
        // First row of the power dotted with the window gives F_n:
        // the power maps the window starting at 0 to the window starting at n.
        let mut acc = BigInt::zero();
        for (c, w) in power.row(0).iter().zip(&self.window) {
            acc += c * w;
        }
        acc
    }

    /// Terms F_lo ..= F_hi in one window walk.
    pub fn terms_range(&self, range: RangeInclusive<i64>) -> Vec<BigInt> {
        let (lo, hi) = (*range.start(), *range.end());
        assert!(lo <= hi, "terms_range: empty range {lo}..={hi}");
        let k = self.k as i64;
        // Extend a buffer covering [min(lo,0), max(hi,k-1)] then slice.
        let mut low_edge = 0i64;
        let mut buf: VecDeque<BigInt> = self.window.iter().cloned().collect();
        while low_edge > lo {
            let mut prev = buf[self.k - 1].clone();
            for v in buf.iter().take(self.k - 1) {
                prev -= v;
            }
            buf.push_front(prev);
            low_edge -= 1;
        }
        while low_edge + buf.len() as i64 - 1 < hi.max(k - 1) {
            let len = buf.len();
            let next: BigInt = buf.range(len - self.k..).sum();
            buf.push_back(next);
        }
        buf.into_iter()
            .skip((lo - low_edge) as usize)
            .take((hi - lo + 1) as usize)
            .collect()
    }

    /// The linear-combination route: F_n = Σ_j B^(j)_n F_j. Contract:
    /// equals `term(n)` for every n.
    pub fn decompose(&self, n: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (j, coeff) in self.window.iter().enumerate() {
            acc += basis(self.k, j).term(n) * coeff;
        }
        acc
    }

    /// Windowwise sum; both sequences must have the same order.
    pub fn add(&self, other: &FibSequence) -> FibSequence {
        assert_eq!(self.k, other.k, "add: mismatched orders");
        let window = self
            .window
            .iter()
            .zip(&other.window)
            .map(|(a, b)| a + b)
            .collect();
        FibSequence { k: self.k, window }
    }

    /// Windowwise difference; both sequences must have the same order.
    pub fn sub(&self, other: &FibSequence) -> FibSequence {
        assert_eq!(self.k, other.k, "sub: mismatched orders");
        let window = self
            .window
            .iter()
            .zip(&other.window)
            .map(|(a, b)| a - b)
            .collect();
        FibSequence { k: self.k, window }
    }

    /// Windowwise scalar multiple.
    pub fn scale(&self, factor: &BigInt) -> FibSequence {
        let window = self.window.iter().map(|w| w * factor).collect();
        FibSequence { k: self.k, window }
    }
}

impl fmt::Display for FibSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fib^({}) window (", self.k)?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Standard basis sequence B^(j): window all zeros except position j.
///
/// Panics unless `0 <= j <= k-1` (and `k >= 2`).
pub fn basis(k: usize, j: usize) -> FibSequence {
    assert!(j < k, "basis: j = {j} out of range for order {k}");
    let mut window = vec![BigInt::zero(); k];
    window[j] = BigInt::one();
    FibSequence::new(k, window)
}

/// The basis sum S = B^(0) + ... + B^(k-1): window all ones.
pub fn sum_basis(k: usize) -> FibSequence {
    FibSequence::new(k, vec![BigInt::one(); k])
}

/// Dense k x k integer matrix, row major. Only what companion-matrix
/// exponentiation needs.
struct Matrix {
    k: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    fn zero(k: usize) -> Self {
        Self { k, data: vec![BigInt::zero(); k * k] }
    }

    fn identity(k: usize) -> Self {
        let mut m = Self::zero(k);
        for i in 0..k {
            m.data[i * k + i] = BigInt::one();
        }
        m
    }

    /// Maps the window starting at t to the window starting at t+1:
    /// rows shift up, last row is all ones (the defining recurrence).
    fn companion_forward(k: usize) -> Self {
        let mut m = Self::zero(k);
        for i in 0..k - 1 {
            m.data[i * k + i + 1] = BigInt::one();
        }
        for j in 0..k {
            m.data[(k - 1) * k + j] = BigInt::one();
        }
        m
    }

    /// Maps the window starting at t to the window starting at t-1:
    /// rows shift down, first row is (-1, ..., -1, 1) (the rearranged
    /// recurrence F_{t-1} = F_{t+k-1} - F_{t+k-2} - ... - F_t).
    fn companion_backward(k: usize) -> Self {
        let mut m = Self::zero(k);
        for i in 1..k {
            m.data[i * k + i - 1] = BigInt::one();
        }
        for j in 0..k - 1 {
            m.data[j] = -BigInt::one();
        }
        m.data[k - 1] = BigInt::one();
        m
    }

    fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    fn mul(&self, other: &Matrix) -> Matrix {
        let k = self.k;
        let mut out = Matrix::zero(k);
        for i in 0..k {
            for l in 0..k {
                let a = &self.data[i * k + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..k {
                    let b = &other.data[l * k + j];
                    if !b.is_zero() {
                        out.data[i * k + j] += a * b;
                    }
                }
            }
        }
        out
    }

    fn pow(&self, mut e: u64) -> Matrix {
        let mut result = Matrix::identity(self.k);
        let mut base = Matrix { k: self.k, data: self.data.clone() };
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}
