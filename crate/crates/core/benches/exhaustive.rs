use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use springer_core::families::{LbpSearch, SnakeSearch, WipSearch};
use springer_core::{par, verify};

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    for n in [6, 7] {
        group.bench_with_input(BenchmarkId::new("snakes/sequential", n), &n, |b, &n| {
            b.iter(|| par::count_sequential(SnakeSearch::new(n)))
        });
        group.bench_with_input(BenchmarkId::new("snakes/sharded", n), &n, |b, &n| {
            b.iter(|| par::count(SnakeSearch::new(n)))
        });
        group.bench_with_input(BenchmarkId::new("wip3/sequential", n), &n, |b, &n| {
            b.iter(|| par::count_sequential(WipSearch::new(n)))
        });
        group.bench_with_input(BenchmarkId::new("wip3/sharded", n), &n, |b, &n| {
            b.iter(|| par::count(WipSearch::new(n)))
        });
        group.bench_with_input(BenchmarkId::new("lbp/sequential", n), &n, |b, &n| {
            b.iter(|| par::count_sequential(LbpSearch::new(n)))
        });
        group.bench_with_input(BenchmarkId::new("lbp/sharded", n), &n, |b, &n| {
            b.iter(|| par::count(LbpSearch::new(n)))
        });
    }
    group.finish();
}

fn properties(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for name in ["bijection-fz", "lemma-rcfz", "bijection-phi"] {
        let prop = verify::find(name).expect("known property");
        group.bench_function(name, |b| b.iter(|| verify::run_property(&prop, 6)));
    }
    group.bench_function("all/n=5", |b| b.iter(|| verify::run_all(5)));
    group.finish();
}

criterion_group!(benches, counting, properties);
criterion_main!(benches);
