use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use quadzeta_core::localfactor::{sweep, Grid, SweepOptions};
use quadzeta_core::ordoracle::{enumerate_ideals, OrderSpec};
use quadzeta_core::{Exec, FactorKind};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn certify_grid(c: &mut Criterion) {
    let grid = Grid::new(13, 10, vec![-1, 0, 1]);
    let opts = SweepOptions::default();
    let mut group = c.benchmark_group("sweep_p13_n10");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| sweep(black_box(&grid), FactorKind::Proper, &opts, exec))
        });
    }
    group.finish();
}

fn enumerate(c: &mut Criterion) {
    let spec = OrderSpec::new(-3, 12).unwrap();
    let mut group = c.benchmark_group("enumerate_ideals_n200");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| enumerate_ideals(black_box(&spec), 200, true, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, certify_grid, enumerate);
criterion_main!(benches);
