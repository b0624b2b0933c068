use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use facolor_bench::{large_workload, workloads};
use facolor_core::SearchConfig;

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for w in workloads() {
        group.bench_function(w.name, |b| b.iter(|| w.run(&SearchConfig::default()).expect("solves")));
    }
    group.finish();
}

fn worker_scaling(c: &mut Criterion) {
    let w = large_workload();
    let mut group = c.benchmark_group(w.name);
    group.sample_size(10);
    for workers in [1, 2, 4] {
        let cfg = SearchConfig::default().with_workers(workers);
        group.bench_with_input(BenchmarkId::new("workers", workers), &cfg, |b, cfg| {
            b.iter(|| w.run(cfg).expect("solves"))
        });
    }
    group.finish();
}

criterion_group!(benches, solvers, worker_scaling);
criterion_main!(benches);
