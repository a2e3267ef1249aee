use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use specjoin::graph::generate;
use specjoin::invariants::{resistance_matrix, spanning_trees_matrix_tree, sv_join_trees_exact};
use specjoin::linalg::{jacobi_eigenvalues, pencil_charpoly};
use specjoin::spectra::{nl_spectrum_direct, normalized_laplacian, sv_join_spectrum_closed, RegularFactor};
use specjoin::{gm_search, sv_join, Family, Graph};

fn g(family: Family, params: &[usize]) -> Graph {
    generate(family, params).unwrap()
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for d in [4, 5, 6] {
        let l = normalized_laplacian(&g(Family::Hypercube, &[d])).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(1usize << d), &l, |b, l| {
            b.iter(|| jacobi_eigenvalues(black_box(l)).unwrap())
        });
    }
    group.finish();
}

fn join_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("sv_join_spectrum");
    let k2 = g(Family::Complete, &[2]);
    for d in [3, 4, 5] {
        let q = g(Family::Hypercube, &[d]);
        let (joined, _) = sv_join(&q, &k2);
        let n = joined.order();
        group.bench_with_input(BenchmarkId::new("direct", n), &joined, |b, j| {
            b.iter(|| nl_spectrum_direct(black_box(j)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed", n), &q, |b, q| {
            b.iter(|| {
                let f1 = RegularFactor::of(black_box(q)).unwrap();
                let f2 = RegularFactor::of(&k2).unwrap();
                sv_join_spectrum_closed(&f1.profile, &f1.spectrum, &f2.profile, &f2.spectrum).unwrap()
            })
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let q4 = g(Family::Hypercube, &[4]);
    let k2 = g(Family::Complete, &[2]);
    let (joined, _) = sv_join(&q4, &k2);
    c.bench_function("pencil_charpoly/q4", |b| b.iter(|| pencil_charpoly(black_box(&q4)).unwrap()));
    c.bench_function("pencil_charpoly/sv_q4_k2", |b| b.iter(|| pencil_charpoly(black_box(&joined)).unwrap()));
    c.bench_function("matrix_tree/sv_q4_k2", |b| b.iter(|| spanning_trees_matrix_tree(black_box(&joined))));
    c.bench_function("trees_exact/sv_q4_k2", |b| b.iter(|| sv_join_trees_exact(black_box(&q4), &k2).unwrap()));
    c.bench_function("resistance/sv_q4_k2", |b| b.iter(|| resistance_matrix(black_box(&joined)).unwrap()));
}

fn switching(c: &mut Criterion) {
    let q4 = g(Family::Hypercube, &[4]);
    let mut group = c.benchmark_group("gm_search");
    group.sample_size(10);
    for size in [4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(size), &size, |b, &s| {
            b.iter(|| gm_search(black_box(&q4), s))
        });
    }
    group.finish();
}

criterion_group!(benches, jacobi, join_spectrum, exact, switching);
criterion_main!(benches);
