//! Benchmarks across the pipeline: graph construction, cycle search, and
//! dense spectra, on the two embedded rank-3 systems and B_3.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use weylham_core::{
    adjacency, build_classical, build_graph, data, eigenvalues, find, parse_roots,
    quotient_classes, ClassicalType, QuotientMode, RootFormat, SearchConfig,
};

fn nr1() -> weylham_core::RootSystem {
    parse_roots(data::CH_RANK3_NR1, RootFormat::ChNotation).unwrap()
}

fn nr2() -> weylham_core::RootSystem {
    parse_roots(data::CH_RANK3_NR2, RootFormat::ChNotation).unwrap()
}

fn bench_build_graph(c: &mut Criterion) {
    let nr2 = nr2();
    let b3 = build_classical(ClassicalType::B, 3).unwrap();
    c.bench_function("build_graph/nr2-32", |b| {
        b.iter(|| build_graph(black_box(&nr2)).unwrap())
    });
    c.bench_function("build_graph/b3-48", |b| {
        b.iter(|| build_graph(black_box(&b3)).unwrap())
    });
}

fn bench_find(c: &mut Criterion) {
    let nr2 = nr2();
    let g_nr2 = build_graph(&nr2).unwrap();
    let b3 = build_classical(ClassicalType::B, 3).unwrap();
    let g_b3 = build_graph(&b3).unwrap();
    let cfg = SearchConfig::default();
    c.bench_function("find/nr2-32", |b| {
        b.iter(|| find(black_box(&nr2), black_box(&g_nr2), &cfg).unwrap())
    });
    c.bench_function("find/b3-48", |b| {
        b.iter(|| find(black_box(&b3), black_box(&g_b3), &cfg).unwrap())
    });
}

fn bench_spectrum(c: &mut Criterion) {
    let g24 = build_graph(&nr1()).unwrap();
    let m24 = adjacency(&g24);
    let g48 = build_graph(&build_classical(ClassicalType::B, 3).unwrap()).unwrap();
    let m48 = adjacency(&g48);
    c.bench_function("eigenvalues/24", |b| {
        b.iter(|| eigenvalues(black_box(&m24)).unwrap())
    });
    c.bench_function("eigenvalues/48", |b| {
        b.iter(|| eigenvalues(black_box(&m48)).unwrap())
    });
}

fn bench_quotient(c: &mut Criterion) {
    let nr2 = nr2();
    let g = build_graph(&nr2).unwrap();
    c.bench_function("quotient_smallest/nr2-32", |b| {
        b.iter(|| quotient_classes(black_box(&nr2), black_box(&g), QuotientMode::Smallest).unwrap())
    });
}

criterion_group!(
    benches,
    bench_build_graph,
    bench_find,
    bench_spectrum,
    bench_quotient
);
criterion_main!(benches);
