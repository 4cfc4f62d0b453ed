//! Window walk vs two-term shortcut vs companion-matrix power, both
//! index directions.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibspace::EvalMethod;
use fibspace_bench::sample_sequence;
use std::hint::black_box;

fn bench_strategies(c: &mut Criterion) {
    let mut group = c.benchmark_group("term");
    group.sample_size(10);
    for k in [2usize, 8] {
        let seq = sample_sequence(k);
        for n in [1_000i64, -1_000, 10_000] {
            for method in EvalMethod::ALL {
                let id = BenchmarkId::new(format!("k{k}/{}", method.name()), n);
                group.bench_with_input(id, &n, |b, &n| {
                    b.iter(|| black_box(seq.term_with(method, black_box(n))))
                });
            }
        }
    }
    group.finish();
}

criterion_group!(benches, bench_strategies);
criterion_main!(benches);
