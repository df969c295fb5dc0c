use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lie_gradings::{
    assess_sigma, dedupe_sigmas, enumerate_sigmas, levi_structure, scan, witt_dimensions,
    RootSystem, Sigma,
};
use lie_gradings_bench::{scan_types, ty};

fn root_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("root_system");
    for name in ["E8", "A30", "B30", "D30"] {
        g.bench_with_input(BenchmarkId::from_parameter(name), &ty(name), |b, &t| {
            b.iter(|| RootSystem::new(black_box(t)))
        });
    }
    g.bench_function("E8 sums", |b| {
        b.iter(|| RootSystem::new(ty("E8")).sum_decompositions().len())
    });
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let rs = RootSystem::new(ty("E7"));
    c.bench_function("enumerate+dedupe E7 k=3", |b| {
        b.iter(|| dedupe_sigmas(&rs, &enumerate_sigmas(&rs, black_box(3))))
    });
}

fn per_grading(c: &mut Criterion) {
    let rs = RootSystem::new(ty("A30"));
    let _ = rs.sum_decompositions();
    let sigma = Sigma::new([7, 15, 22], 30).unwrap();
    c.bench_function("assess A30 {7,15,22}", |b| {
        b.iter(|| assess_sigma(&rs, black_box(&sigma), 3))
    });
    c.bench_function("levi A30 {7,15,22}", |b| {
        b.iter(|| levi_structure(ty("A30"), black_box(&sigma)))
    });
    c.bench_function("witt r=100 k=12", |b| {
        b.iter(|| witt_dimensions(black_box(100), 12))
    });
}

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    for max_rank in [12, 20] {
        let types = scan_types(max_rank);
        g.bench_with_input(BenchmarkId::from_parameter(max_rank), &types, |b, types| {
            b.iter(|| scan(types, 3, true).unwrap().entries.len())
        });
    }
    g.finish();
}

criterion_group!(benches, root_systems, enumeration, per_grading, scans);
criterion_main!(benches);
