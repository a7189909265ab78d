use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pschen_core::arith::SpfTable;
use pschen_core::exec::Exec;
use pschen_core::ps::{chen_counts_with, count_near_diagonal_with, enumerate_ps_with, sieve_primes_with, ChenParams, PSContext};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sieve(c: &mut Criterion) {
    let mut g = c.benchmark_group("sieve_primes_1e7");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| sieve_primes_with(2, black_box(10_000_000), exec).unwrap().count())
        });
    }
    g.finish();
}

fn enumerate(c: &mut Criterion) {
    let ctx = PSContext::new(0.95).unwrap();
    let mut g = c.benchmark_group("enumerate_ps_1e6");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_ps_with(black_box(1_000_000), &ctx, exec).unwrap().len())
        });
    }
    g.finish();
}

fn chen(c: &mut Criterion) {
    let ctx = PSContext::new(0.95).unwrap();
    let spf = SpfTable::new(1_000_000).unwrap();
    let params = ChenParams::default();
    let mut g = c.benchmark_group("chen_counts_1e6");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| chen_counts_with(black_box(1_000_000), &ctx, &params, &spf, exec).unwrap().s)
        });
    }
    g.finish();
}

fn near_diagonal(c: &mut Criterion) {
    let mut g = c.benchmark_group("near_diagonal_256x256");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| count_near_diagonal_with(256, 256, 0.8, black_box(0.5), u64::MAX, exec).unwrap().count)
        });
    }
    g.finish();
}

criterion_group!(benches, sieve, enumerate, chen, near_diagonal);
criterion_main!(benches);
