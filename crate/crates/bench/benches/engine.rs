use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use minimal4::linalg::kernel_basis;
use minimal4::{build, BuildOptions, CohomologyAlgebra};
use minimal4_bench::cocycle_system;

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    for b2 in [3, 5] {
        let sparse = cocycle_system(b2, 4, 5);
        let dense = sparse.to_dense();
        group.bench_with_input(BenchmarkId::new("sparse", b2), &sparse, |b, m| b.iter(|| m.kernel()));
        group.bench_with_input(BenchmarkId::new("dense", b2), &dense, |b, m| b.iter(|| kernel_basis(m)));
    }
    group.finish();
}

fn models(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for (b2, d) in [(3, 5), (4, 5), (8, 4)] {
        let a = CohomologyAlgebra::four_manifold(b2, 0);
        group.bench_function(format!("b2={b2} D={d}"), |b| b.iter(|| build(&a, d, &BuildOptions::default())));
    }
    group.finish();
}

criterion_group!(benches, kernels, models);
criterion_main!(benches);
