use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lapspec::{build_laplacian, spectrum_closed_form, spectrum_numeric, Topology, WeightVector};

fn weights(t: Topology) -> WeightVector {
    let w = (0..t.edge_count()).map(|k| 0.5 + 0.37 * k as f64).collect();
    WeightVector::new(w).unwrap()
}

fn four_vertex(c: &mut Criterion) {
    let mut g = c.benchmark_group("four_vertex");
    for t in Topology::FOUR_VERTEX {
        let w = weights(t);
        g.bench_with_input(BenchmarkId::new("closed_form", t), &w, |b, w| {
            b.iter(|| spectrum_closed_form(black_box(t), black_box(w)).unwrap())
        });
        let m = build_laplacian(t, &w).unwrap();
        g.bench_with_input(BenchmarkId::new("jacobi", t), &m, |b, m| {
            b.iter(|| spectrum_numeric(black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn complete(c: &mut Criterion) {
    let mut g = c.benchmark_group("jacobi_complete");
    for n in [8, 16, 32, 64] {
        let t = Topology::Complete(n);
        let m = build_laplacian(t, &weights(t)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| spectrum_numeric(black_box(m)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, four_vertex, complete);
criterion_main!(benches);
