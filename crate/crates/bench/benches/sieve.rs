use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hopf_sieve_core::{enumerate_raw, fusion_dual_group, run_sieve, GroupSpec};

fn sieve(c: &mut Criterion) {
    c.bench_function("run_sieve(60)", |b| {
        b.iter(|| run_sieve(black_box(60)).unwrap())
    });
    c.bench_function("run_sieve(120)", |b| {
        b.iter(|| run_sieve(black_box(120)).unwrap())
    });
}

fn enumerate(c: &mut Criterion) {
    c.bench_function("enumerate_raw(60)", |b| {
        b.iter(|| enumerate_raw(black_box(60)).unwrap())
    });
    c.bench_function("enumerate_raw(240)", |b| {
        b.iter(|| enumerate_raw(black_box(240)).unwrap())
    });
}

fn fusion(c: &mut Criterion) {
    for spec in ["A5", "S4", "D15", "A4xC3"] {
        let spec: GroupSpec = spec.parse().unwrap();
        c.bench_function(&format!("fusion_dual_group({spec})"), |b| {
            b.iter(|| fusion_dual_group(black_box(&spec)).unwrap())
        });
    }
}

criterion_group!(benches, sieve, enumerate, fusion);
criterion_main!(benches);
