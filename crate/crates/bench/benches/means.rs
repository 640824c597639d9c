// SPDX-License-Identifier: MIT OR Apache-2.0

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gini_bench::log_spaced;
use gini_core::polymer::{generate_flory, polydispersity};
use gini_core::{
    check_theorem, gini_mean, oracle_gini, ExponentPair, OracleConfig, ParameterOrder,
};

fn pair(p: f64, q: f64) -> ExponentPair {
    ExponentPair::new(p, q).unwrap()
}

fn means(c: &mut Criterion) {
    let mut group = c.benchmark_group("gini_mean");
    for n in [2, 16, 64, 1024] {
        let sample = log_spaced(n);
        group.bench_with_input(BenchmarkId::new("p2_q1", n), &sample, |b, s| {
            b.iter(|| gini_mean(black_box(s), pair(2.0, 1.0)))
        });
        group.bench_with_input(BenchmarkId::new("near_diagonal", n), &sample, |b, s| {
            b.iter(|| gini_mean(black_box(s), pair(3.0 + 1e-9, 3.0)))
        });
    }
    group.finish();
}

fn audit(c: &mut Criterion) {
    let sample = log_spaced(64);
    let resolved = ParameterOrder::new(pair(1.0, 0.0), pair(2.0, 1.0)).unwrap();
    let tilted = ParameterOrder::new(pair(45.0, 40.0), pair(46.0, 41.0)).unwrap();
    c.bench_function("check_theorem/resolved", |b| {
        b.iter(|| check_theorem(black_box(&sample), &resolved))
    });
    c.bench_function("check_theorem/tilted", |b| {
        b.iter(|| check_theorem(black_box(&sample), &tilted))
    });
}

fn oracle(c: &mut Criterion) {
    let sample = log_spaced(16);
    let cfg = OracleConfig::default();
    c.bench_function("oracle_gini/n16", |b| {
        b.iter(|| oracle_gini(black_box(&sample), pair(7.5, -3.0), &cfg).unwrap())
    });
}

fn polymer(c: &mut Criterion) {
    let flory = generate_flory(100.0, 0.99, 1e-12).unwrap();
    c.bench_function("polydispersity/flory_0.99", |b| {
        b.iter(|| polydispersity(black_box(&flory)))
    });
}

criterion_group!(benches, means, audit, oracle, polymer);
criterion_main!(benches);
