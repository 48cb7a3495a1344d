use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use vorder::kcut;
use vorder::report::Objective;
use vorder::subset_dp;
use vorder_bench::{sparse, sparse_weighted};

fn subset_dps(c: &mut Criterion) {
    let mut group = c.benchmark_group("subset_dp");
    group.sample_size(10);
    for n in [12, 16, 20] {
        let g = sparse(n);
        for obj in Objective::ALL {
            group.bench_with_input(BenchmarkId::new(obj.name(), n), &g, |b, g| {
                b.iter(|| subset_dp::exact(black_box(g), obj).unwrap().value)
            });
        }
    }
    group.finish();
}

fn min_cut(c: &mut Criterion) {
    let mut group = c.benchmark_group("dkmc");
    group.sample_size(10);
    for n in [12, 16, 20] {
        let g = sparse_weighted(n);
        group.bench_with_input(BenchmarkId::new("exact", n), &g, |b, g| {
            b.iter(|| kcut::dkmc_exact(black_box(g), n / 2).unwrap().0.value)
        });
        group.bench_with_input(BenchmarkId::new("rounded_eps_0.5", n), &g, |b, g| {
            b.iter(|| kcut::dkmc_weighted_approx(black_box(g), n / 2, 0.5).unwrap().0.value)
        });
        if n <= 16 {
            group.bench_with_input(BenchmarkId::new("enumeration", n), &g, |b, g| {
                b.iter(|| kcut::dkmc_oracle(black_box(g), n / 2).unwrap().value)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, subset_dps, min_cut);
criterion_main!(benches);
