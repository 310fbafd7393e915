use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sgeo_bench::{cylinder, grid};
use sgeo_core::constructions::{build_certificate, cylinder_anchors, grid_anchors};
use sgeo_core::{
    build_dag, count_geodesics, interval, strong_geodetic_number, verify_certificate, SolverConfig,
};

fn geodesics(c: &mut Criterion) {
    let g = grid(25, 25);
    c.bench_function("count corner geodesics 25x25", |b| {
        b.iter(|| count_geodesics(&build_dag(&g, 0).unwrap(), black_box(624)))
    });
    c.bench_function("interval 25x25", |b| {
        b.iter(|| interval(&g, black_box(0), black_box(624)).unwrap())
    });
}

fn constructions(c: &mut Criterion) {
    let grid_anchors = grid_anchors(25, 25).unwrap();
    let cyl_anchors = cylinder_anchors(25, 25).unwrap();
    c.bench_function("construct grid 25x25", |b| {
        b.iter(|| build_certificate(black_box(&grid_anchors)).unwrap())
    });
    c.bench_function("construct cylinder 25x25", |b| {
        b.iter(|| build_certificate(black_box(&cyl_anchors)).unwrap())
    });
    let g = cylinder(25, 25);
    let cert = build_certificate(&cyl_anchors).unwrap();
    c.bench_function("verify cylinder 25x25", |b| {
        b.iter(|| verify_certificate(&g, black_box(&cert)))
    });
}

fn solver(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let g = grid(7, 2);
    c.bench_function("sg grid 7x2", |b| {
        b.iter(|| strong_geodetic_number(black_box(&g), &cfg).unwrap())
    });
    let g = grid(17, 3);
    let hinted = SolverConfig {
        hints: vec![
            build_certificate(&grid_anchors(17, 3).unwrap())
                .unwrap()
                .vertices,
        ],
        ..SolverConfig::default()
    };
    c.bench_function("sg grid 17x3 with hint", |b| {
        b.iter(|| strong_geodetic_number(black_box(&g), &hinted).unwrap())
    });
}

criterion_group!(benches, geodesics, constructions, solver);
criterion_main!(benches);
