use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mbtd_bench::construction_fixtures;
use mbtd_core::small_graphs::{connected_graphs, random_connected_graph};
use mbtd_core::{
    naive_value, solve_value, solve_with, total_domination_number, SolveOptions, SolveSpec,
};

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for (name, g, spec) in construction_fixtures() {
        group.bench_with_input(
            BenchmarkId::new(spec.invariant_name().unwrap(), &name),
            &g,
            |b, g| b.iter(|| solve_value(black_box(g), spec)),
        );
    }
    group.finish();
}

fn threads(c: &mut Criterion) {
    let (name, g, spec) = construction_fixtures().swap_remove(3);
    let mut group = c.benchmark_group(format!("threads/{name}"));
    group.sample_size(10);
    for t in [1, 2, 4] {
        let opts = SolveOptions {
            threads: t,
            ..Default::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(t), &opts, |b, opts| {
            b.iter(|| solve_with(black_box(&g), spec, opts).unwrap())
        });
    }
    group.finish();
}

fn oracle_vs_solver(c: &mut Criterion) {
    let g = random_connected_graph(7, 7);
    c.bench_function("naive/n7", |b| {
        b.iter(|| naive_value(black_box(&g), SolveSpec::MBT))
    });
    c.bench_function("exact/n7", |b| {
        b.iter(|| solve_value(black_box(&g), SolveSpec::MBT))
    });
}

fn helpers(c: &mut Criterion) {
    let (_, g, _) = construction_fixtures().swap_remove(0);
    c.bench_function("gamma_t/G_3", |b| {
        b.iter(|| total_domination_number(black_box(&g)))
    });
    c.bench_function("connected_graphs/6", |b| {
        b.iter(|| connected_graphs(black_box(6)))
    });
}

criterion_group!(benches, constructions, threads, oracle_vs_solver, helpers);
criterion_main!(benches);
