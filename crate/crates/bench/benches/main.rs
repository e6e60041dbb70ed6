use criterion::{black_box, criterion_group, criterion_main, Criterion};

use tropical_bench::*;
use tropical_core::*;

fn bench_closure(c: &mut Criterion) {
    let mut r = rng();
    let h = random_adjacency(60, 0.1, &mut r);
    c.bench_function("kleene_closure_60", |b| {
        b.iter(|| black_box(&h).kleene_closure().unwrap())
    });
    let f = SemiringMatrix::identity(60, h.spec());
    c.bench_function("solve_bellman_60x60", |b| {
        b.iter(|| solve_bellman(black_box(&h), black_box(&f)).unwrap())
    });
}

fn bench_legendre(c: &mut Criterion) {
    let phi = concave_grid(512);
    let xi = GridGeom::line(-8.0, 0.03125, 513).unwrap();
    c.bench_function("legendre_sweep_512", |b| {
        b.iter(|| legendre_transform(black_box(&phi), black_box(&xi)).unwrap())
    });
    c.bench_function("legendre_brute_512", |b| {
        b.iter(|| legendre_transform_brute(black_box(&phi), black_box(&xi)).unwrap())
    });
}

fn bench_convolution(c: &mut Criterion) {
    let mut r = rng();
    let a = rough_grid(256, &mut r);
    let b2 = rough_grid(256, &mut r);
    c.bench_function("sup_convolution_256", |b| {
        b.iter(|| sup_convolution(black_box(&a), black_box(&b2)).unwrap())
    });
}

fn bench_hopf_lax(c: &mut Criterion) {
    let prob = quadratic_problem(401);
    let s0 = prob.initial_action().clone();
    c.bench_function("hopf_lax_step_401", |b| {
        b.iter(|| hopf_lax_step(black_box(&s0), 0.1, black_box(&prob)).unwrap())
    });
}

fn bench_boxdim(c: &mut Criterion) {
    let cloud = cantor(10);
    let scales: Vec<f64> = (1..=7).map(|j| 3.0f64.powi(-j) / 2.0).collect();
    c.bench_function("hb_dimension_cantor10", |b| {
        b.iter(|| hb_dimension(black_box(&cloud), black_box(&scales)).unwrap())
    });
}

fn bench_amoeba(c: &mut Criterion) {
    let f = line_curve();
    let w = Window::new(-3.0, 3.0, -3.0, 3.0).unwrap();
    c.bench_function("sample_amoeba_line_h025", |b| {
        b.iter(|| sample_amoeba(black_box(&f), 0.25, 41, black_box(&w)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_closure,
    bench_legendre,
    bench_convolution,
    bench_hopf_lax,
    bench_boxdim,
    bench_amoeba
);
criterion_main!(benches);
