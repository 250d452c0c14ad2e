use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use mindist_bench::{gamma, store};
use mindist_core::enumeration::{
    enumerate_basic, enumerate_optimized, enumerate_parallel, enumerate_saved,
    enumerate_saved_unrolled, enumerate_stack,
};
use mindist_core::{binomial, minimum_distance, EngineConfig, Strategy};

const K: usize = 36;
const N: usize = 100;
const G: usize = 4;

fn strategies(c: &mut Criterion) {
    let gamma = gamma(K, N, 1);
    let store = store(&gamma, 3);
    let mut group = c.benchmark_group("enumerate");
    group.throughput(Throughput::Elements(
        binomial(K as u64, G as u64).unwrap() as u64
    ));
    group.sample_size(20);
    group.bench_function("basic", |b| {
        b.iter(|| enumerate_basic(&gamma, G, usize::MAX).unwrap())
    });
    group.bench_function("optimized", |b| {
        b.iter(|| enumerate_optimized(&gamma, G, usize::MAX).unwrap())
    });
    group.bench_function("stack", |b| {
        b.iter(|| enumerate_stack(&gamma, G, usize::MAX).unwrap())
    });
    group.bench_function("saved", |b| {
        b.iter(|| enumerate_saved(&store, G, usize::MAX).unwrap())
    });
    for unroll in [2, 3] {
        group.bench_with_input(
            BenchmarkId::new("saved-unrolled", unroll),
            &unroll,
            |b, &u| b.iter(|| enumerate_saved_unrolled(&store, G, usize::MAX, u).unwrap()),
        );
    }
    group.finish();
}

fn workers(c: &mut Criterion) {
    let gamma = gamma(K, N, 2);
    let store = store(&gamma, 3);
    let mut group = c.benchmark_group("parallel");
    group.throughput(Throughput::Elements(binomial(K as u64, 5).unwrap() as u64));
    group.sample_size(10);
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    for w in [1, 2, 4].into_iter().filter(|&w| w == 1 || w <= cores) {
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| enumerate_parallel(&store, 5, usize::MAX, w, 1).unwrap())
        });
    }
    group.finish();
}

fn full_run(c: &mut Criterion) {
    let g = mindist_core::random::random_systematic::<u32>(24, 72, 3).unwrap();
    let mut group = c.benchmark_group("minimum_distance");
    group.sample_size(10);
    for strategy in Strategy::ALL {
        let cfg = EngineConfig::with_strategy(strategy);
        group.bench_function(strategy.name(), |b| {
            b.iter(|| minimum_distance(&g, &cfg).unwrap().distance)
        });
    }
    group.finish();
}

criterion_group!(benches, strategies, workers, full_run);
criterion_main!(benches);
