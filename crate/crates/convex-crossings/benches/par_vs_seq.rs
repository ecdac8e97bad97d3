//! Parallel vs sequential comparison: crossing counting, exhaustive
//! enumeration, and heuristic restarts.
//!
//! With the default `parallel` feature the `*_seq` entries are the
//! sequential fallback and the plain entries run on rayon; built with
//! `--no-default-features` both entries take the sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use convex_crossings::drawing::{crossings_of_class_sequence, crossings_of_class_sequence_seq};
use convex_crossings::layout::even_drawing;
use convex_crossings::search::{exact_min, exact_min_seq, heuristic_min, heuristic_min_seq};
use convex_crossings::PartitionSpec;

fn bench_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_crossings");
    for (m, n, p) in [(2u64, 5u64, 10u64), (3, 8, 24), (4, 10, 40)] {
        let drawing = even_drawing(m, n, p).unwrap();
        let classes = drawing.class_sequence();
        let label = format!("K({p}^1,{m}^{n})_N{}", classes.len());
        group.bench_with_input(BenchmarkId::new("seq", &label), &classes, |b, cls| {
            b.iter(|| crossings_of_class_sequence_seq(cls))
        });
        group.bench_with_input(BenchmarkId::new("par", &label), &classes, |b, cls| {
            b.iter(|| crossings_of_class_sequence(cls))
        });
    }
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_min");
    group.sample_size(10);
    let spec = PartitionSpec::new(vec![2, 2, 2, 1, 1]).unwrap();
    group.bench_function("seq", |b| b.iter(|| exact_min_seq(&spec, u64::MAX)));
    group.bench_function("par", |b| b.iter(|| exact_min(&spec, u64::MAX)));
    group.finish();
}

fn bench_heuristic(c: &mut Criterion) {
    let mut group = c.benchmark_group("heuristic_min");
    group.sample_size(10);
    let spec = PartitionSpec::new(vec![3; 5]).unwrap();
    group.bench_function("seq", |b| b.iter(|| heuristic_min_seq(&spec, 0, 64, 10_000)));
    group.bench_function("par", |b| b.iter(|| heuristic_min(&spec, 0, 64, 10_000)));
    group.finish();
}

criterion_group!(benches, bench_counting, bench_exact, bench_heuristic);
criterion_main!(benches);
