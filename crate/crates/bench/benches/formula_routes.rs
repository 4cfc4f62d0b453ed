//! Closed-form routes against the recurrence walk for single basis
//! terms.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibspace::formulas::{basis_binomial, basis_multinomial};
use fibspace::sequence::basis;
use std::hint::black_box;

fn bench_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis_term");
    group.sample_size(10);
    let (k, j) = (4usize, 2usize);
    for n in [-30i64, 40] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            let seq = basis(k, j);
            b.iter(|| black_box(seq.term(black_box(n))))
        });
        group.bench_with_input(BenchmarkId::new("binomial", n), &n, |b, &n| {
            b.iter(|| black_box(basis_binomial(k, j, black_box(n))))
        });
        group.bench_with_input(BenchmarkId::new("multinomial", n), &n, |b, &n| {
            b.iter(|| black_box(basis_multinomial(k, j, black_box(n))))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_routes);
criterion_main!(benches);
