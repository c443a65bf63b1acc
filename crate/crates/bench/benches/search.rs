use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tightcycle::{
    classify_pairs, count_closed_tight_walks, exhaustive_small, has_closed_tight_walk,
    mod3_construction, prove_pipeline, Epsilon,
};
use tightcycle_bench::{qualifying_host, sparse_host};

fn walks(c: &mut Criterion) {
    let mut group = c.benchmark_group("walk_existence");
    for n in [15, 30, 45] {
        let h = mod3_construction(n).unwrap();
        group.bench_with_input(BenchmarkId::new("construction_len10", n), &h, |b, h| {
            b.iter(|| has_closed_tight_walk(black_box(h), 10).unwrap())
        });
        let s = sparse_host(n, 1);
        group.bench_with_input(BenchmarkId::new("sparse_len10", n), &s, |b, h| {
            b.iter(|| has_closed_tight_walk(black_box(h), 10).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("walk_count");
    for n in [12, 24] {
        let h = mod3_construction(n).unwrap();
        group.bench_with_input(BenchmarkId::new("construction_len12", n), &h, |b, h| {
            b.iter(|| count_closed_tight_walks(black_box(h), 12).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_pairs");
    for n in [30, 60] {
        let h = qualifying_host(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| classify_pairs(black_box(h)))
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let eps = Epsilon::new(1, 20).unwrap();
    let mut group = c.benchmark_group("prove_pipeline");
    for n in [30, 60] {
        let h = qualifying_host(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| prove_pipeline(black_box(h), eps))
        });
    }
    group.finish();
}

fn extremal(c: &mut Criterion) {
    c.bench_function("exhaustive_n6_len10", |b| {
        b.iter(|| exhaustive_small(6, black_box(10)).unwrap())
    });
}

criterion_group!(benches, walks, classification, pipeline, extremal);
criterion_main!(benches);
