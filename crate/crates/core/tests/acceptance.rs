//! Acceptance suite: every criterion is exact-equality based and prints
//! one pass/fail line. Run with
//! `cargo test -p fibspace --test acceptance -- --nocapture`.

use fibspace::formulas::{aux_a, basis_binomial, basis_multinomial, s_closed, s_split_range};
use fibspace::sequence::{basis, sum_basis, EvalMethod, FibSequence};
use fibspace::tiling::{c_sequence, count_tilings_bruteforce, TilingInstance};
use fibspace::{binom_table, identities, BigInt};
use std::time::Instant;

fn report(criterion: usize, description: &str) {
    println!("ACCEPTANCE {criterion}: PASS — {description}");
}

#[test]
fn criterion_1_order5_worked_example() {
    let seq = FibSequence::from_i64(5, &[3, 1, 4, 1, 5]);
    let expected: [i64; 11] = [-2, 7, -3, -4, 3, 1, 4, 1, 5, 14, 25];
    let got = seq.terms_range(-4..=6);
    let want: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(got, want);
    report(1, "order-5 example (3,1,4,1,5) reproduces terms for n = -4..6 exactly");
}

#[test]
fn criterion_2_binomial_table_13x13() {
    // Rows n = 6 down to -6, columns i = -6..6, exactly as printed in
    // the source table.
    #[rustfmt::skip]
    let printed: [[i64; 13]; 13] = [
        [  0,  0,  0, 0,  0, 0, 1, 6, 15, 20, 15, 6, 1],
        [  0,  0,  0, 0,  0, 0, 1, 5, 10, 10,  5, 1, 0],
        [  0,  0,  0, 0,  0, 0, 1, 4,  6,  4,  1, 0, 0],
        [  0,  0,  0, 0,  0, 0, 1, 3,  3,  1,  0, 0, 0],
        [  0,  0,  0, 0,  0, 0, 1, 2,  1,  0,  0, 0, 0],
        [  0,  0,  0, 0,  0, 0, 1, 1,  0,  0,  0, 0, 0],
        [  0,  0,  0, 0,  0, 0, 1, 0,  0,  0,  0, 0, 0],
        [ -1,  1, -1, 1, -1, 1, 0, 0,  0,  0,  0, 0, 0],
        [  5, -4,  3, -2, 1, 0, 0, 0,  0,  0,  0, 0, 0],
        [-10,  6, -3, 1,  0, 0, 0, 0,  0,  0,  0, 0, 0],
        [ 10, -4,  1, 0,  0, 0, 0, 0,  0,  0,  0, 0, 0],
        [ -5,  1,  0, 0,  0, 0, 0, 0,  0,  0,  0, 0, 0],
        [  1,  0,  0, 0,  0, 0, 0, 0,  0,  0,  0, 0, 0],
    ];
    let table = binom_table(-6..=6, -6..=6);
    for (row_offset, n) in (-6..=6).enumerate() {
        let printed_row = &printed[(6 - n) as usize];
        for (col, i) in (-6..=6).enumerate() {
            assert_eq!(
                table[row_offset][col],
                BigInt::from(printed_row[col]),
                "cell (n = {n}, i = {i})"
            );
        }
    }
    report(2, "13x13 generalized-binomial table (n, i in [-6, 6]) reproduced cell-for-cell");
}

#[test]
fn criterion_3_formula_oracle_grid() {
    for k in 2..=6usize {
        let s_oracle = sum_basis(k).terms_range(-40..=60);
        for (offset, want) in s_oracle.iter().enumerate() {
            let n = -40 + offset as i64;
            assert_eq!(s_closed(k, n), *want, "s_closed k={k} n={n}");
            assert_eq!(s_split_range(k, n), *want, "s_split_range k={k} n={n}");
        }
        for j in 0..k {
            let oracle = basis(k, j).terms_range(-40..=60);
            for (offset, want) in oracle.iter().enumerate() {
                let n = -40 + offset as i64;
                assert_eq!(basis_binomial(k, j, n), *want, "basis_binomial k={k} j={j} n={n}");
                assert_eq!(
                    basis_multinomial(k, j, n),
                    *want,
                    "basis_multinomial k={k} j={j} n={n}"
                );
            }
        }
    }
    report(
        3,
        "binomial and multinomial formulas equal the recurrence oracle for k in 2..6, j in 0..k-1, n in [-40, 60]",
    );
}

#[test]
fn criterion_4_identity_catalog() {
    let mut checked = 0usize;
    for k in 2..=6usize {
        for identity in identities::catalog(k) {
            let outcome = identity.verify(k, -20..=20);
            assert!(
                outcome.passed(),
                "k = {k}, {}: {:?}",
                identity.id,
                outcome.first_mismatch()
            );
            checked += 1;
        }
    }
    report(
        4,
        &format!(
            "all ten operator relations and seven basis/sum relations pass pointwise on every basis sequence, k in 2..6, window [-20, 20] ({checked} expanded checks)"
        ),
    );
}

#[test]
fn criterion_5_auxiliary_sequence() {
    for k in 2..=8usize {
        let ki = k as i64;
        for n in 0..ki {
            assert_eq!(aux_a(k, n), BigInt::from(0), "A_{n} at k = {k}");
        }
        assert_eq!(aux_a(k, ki), BigInt::from(-1), "A_k at k = {k}");
        for n in -30..=50 {
            assert_eq!(
                aux_a(k, n),
                2 * aux_a(k, n - 1) - aux_a(k, n - ki - 1),
                "two-term recurrence k = {k}, n = {n}"
            );
            let full: BigInt =
                (1..=ki).map(|i| aux_a(k, n - i)).sum::<BigInt>() - BigInt::from(1);
            assert_eq!(aux_a(k, n), full, "full-width recurrence k = {k}, n = {n}");
        }
    }
    report(
        5,
        "A_0..A_(k-1) = 0 and A_k = -1 for k in 2..8; both recurrences hold on n in [-30, 50]",
    );
}

#[test]
fn criterion_6_tiling_bridge() {
    for k in 2..=5usize {
        let c = c_sequence(k);
        for n in 0..=14i64 {
            let counted = count_tilings_bruteforce(&TilingInstance::new(n, k));
            assert_eq!(counted, c.term(n + 1), "k = {k}, n = {n}");
        }
    }
    report(6, "brute-force tilings(n, k) = C_(n+1) for k in 2..5, n in [0, 14]");
}

#[test]
fn criterion_7_classical_reduction() {
    // Independent classic-Fibonacci oracle: a plain two-variable walk.
    let mut forward = Vec::with_capacity(31);
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..=30 {
        forward.push(a.clone());
        let next = &a + &b;
        a = b;
        b = next;
    }
    let fib = basis(2, 1);
    for (n, want) in forward.iter().enumerate() {
        let n = n as i64;
        assert_eq!(fib.term(n), *want, "F_{n}");
        let reflection = if n % 2 == 0 { -want } else { want.clone() };
        assert_eq!(fib.term(-n), reflection, "F_(-{n}) = (-1)^(n+1) F_{n}");
    }
    report(7, "B^(1) at k = 2 is classic Fibonacci with F_(-n) = (-1)^(n+1) F_n for n in [0, 30]");
}

#[test]
fn criterion_8_strategy_agreement_at_scale() {
    for k in [2usize, 5, 8] {
        let window: Vec<i64> = (0..k as i64).map(|i| i % 3 + 1).collect();
        let seq = FibSequence::from_i64(k, &window);
        for n in [1_000i64, -1_000, 10_000, -10_000, 100_000] {
            let mut values = Vec::new();
            for method in EvalMethod::ALL {
                let start = Instant::now();
                let value = seq.term_with(method, n);
                let elapsed = start.elapsed();
                println!(
                    "  strategy timing k={k} n={n} {}: {:.3}s",
                    method.name(),
                    elapsed.as_secs_f64()
                );
                values.push(value);
            }
            assert_eq!(values[0], values[1], "window vs shortcut at k={k}, n={n}");
            assert_eq!(values[0], values[2], "window vs matpow at k={k}, n={n}");
        }
    }
    report(
        8,
        "window, shortcut and matrix-power strategies agree exactly for k in {2, 5, 8} at n in {±10^3, ±10^4, 10^5}",
    );
}
