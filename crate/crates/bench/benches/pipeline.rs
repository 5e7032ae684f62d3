use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use axial_core::{build_graph, local_clique_number, profiles, AxialGeometry, LocalValues};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for n in [20u32, 25, 30] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build_graph(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let g = build_graph(30).unwrap();
    c.bench_function("axial_geometry/30", |b| {
        b.iter(|| AxialGeometry::compute(black_box(&g)))
    });
}

fn bench_cliques(c: &mut Criterion) {
    let g = build_graph(30).unwrap();
    let hub = g.vertex_ids().max_by_key(|&v| g.degree(v)).unwrap();
    c.bench_function("local_clique_number/30/max_degree", |b| {
        b.iter(|| local_clique_number(&g, black_box(hub)))
    });
    c.bench_function("local_values/30", |b| {
        b.iter(|| LocalValues::compute(black_box(&g)))
    });
}

fn bench_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for n in [30u32, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let g = build_graph(n).unwrap();
                let geom = AxialGeometry::compute(&g);
                profiles(&g, &geom)
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_build,
    bench_geometry,
    bench_cliques,
    bench_pipeline
);
criterion_main!(benches);
