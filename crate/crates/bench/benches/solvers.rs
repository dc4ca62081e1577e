use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use udgds_bench::{uniform_instance, uniform_points};
use udgds_core::algorithms::{mis5, reduce44_geometric, reduce44_graph, weak43};
use udgds_core::instances::{paper_instance, PaperInstance};
use udgds_core::oracle::exact_min_dominating_set;
use udgds_core::spatial::build_adjacency;
use udgds_core::{OrderPolicy, SolveOptions};

const SIZES: [usize; 3] = [10_000, 20_000, 40_000];

fn graph_solvers(c: &mut Criterion) {
    let opts = SolveOptions::with_order(OrderPolicy::Seeded(1));
    let mut group = c.benchmark_group("graph");
    group.sample_size(20);
    for n in SIZES {
        let (_, g) = uniform_instance(n, 0);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("mis5", n), &g, |b, g| {
            b.iter(|| mis5(black_box(g), &opts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("reduce44", n), &g, |b, g| {
            b.iter(|| reduce44_graph(black_box(g), &opts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("weak43", n), &g, |b, g| {
            b.iter(|| weak43(black_box(g), &opts).unwrap())
        });
    }
    group.finish();
}

fn geometric(c: &mut Criterion) {
    let opts = SolveOptions::with_order(OrderPolicy::Seeded(1));
    let mut group = c.benchmark_group("geometric");
    group.sample_size(10);
    for n in SIZES {
        let points = uniform_points(n, 0);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("adjacency", n), &points, |b, p| {
            b.iter(|| build_adjacency(black_box(p)))
        });
        group.bench_with_input(BenchmarkId::new("geo44", n), &points, |b, p| {
            b.iter(|| reduce44_geometric(black_box(p), &opts).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for which in PaperInstance::ALL {
        let g = build_adjacency(&paper_instance(which));
        group.bench_function(which.name(), |b| {
            b.iter(|| exact_min_dominating_set(black_box(&g), g.n(), u64::MAX).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, graph_solvers, geometric, oracle);
criterion_main!(benches);
