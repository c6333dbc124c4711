use std::hint::black_box;

use chainsearch::{
    find_all_components, find_connected_component, ArithmeticMode, SeedRule, TraversalConfig,
    Variant, VertexId,
};
use chainsearch_bench::{ascending_path, descending_path, multi_component, sparse_connected};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn configs() -> Vec<(&'static str, TraversalConfig)> {
    vec![
        ("jacobi-exact", TraversalConfig::jacobi().with_cross_check(false)),
        (
            "gauss-seidel-exact",
            TraversalConfig::gauss_seidel().with_cross_check(false),
        ),
        (
            "gauss-seidel-float",
            TraversalConfig::new(Variant::GaussSeidel, ArithmeticMode::Float)
                .with_cross_check(false),
        ),
        ("unsigned-saturate-masked", TraversalConfig::detection()),
    ]
}

fn single_component(c: &mut Criterion) {
    let mut group = c.benchmark_group("single_component");
    let graphs = [
        ("random-2000", sparse_connected(2000, 3.0, 11)),
        ("ascending-path-500", ascending_path(500)),
        ("descending-path-500", descending_path(500)),
    ];
    for (gname, g) in &graphs {
        for (cname, cfg) in configs() {
            group.bench_with_input(BenchmarkId::new(cname, gname), g, |b, g| {
                b.iter(|| find_connected_component(black_box(g), VertexId::new(1), &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn all_components(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_components");
    group.sample_size(10);
    let g = multi_component(20_000, 50, 3.0, 5);
    group.bench_function("detection-20000-k50", |b| {
        b.iter(|| {
            find_all_components(black_box(&g), &TraversalConfig::detection(), SeedRule::LowestLabel)
                .unwrap()
        })
    });
    group.bench_function("union-find-20000-k50", |b| {
        b.iter(|| chainsearch::components_union_find(black_box(&g)))
    });
    group.finish();
}

criterion_group!(benches, single_component, all_components);
criterion_main!(benches);
