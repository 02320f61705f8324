//! Benchmarks for the hot paths: lattice isomorphism search, the census
//! enumerations, and moduli solving.

use criterion::{criterion_group, criterion_main, Criterion};

use arrlab_core::catalog::{self, Sign};
use arrlab_core::classify::{enumerate_933, enumerate_quadruple_case};
use arrlab_core::lattice::find_isomorphism;
use arrlab_core::moduli::solve_moduli;

fn bench_isomorphism(c: &mut Criterion) {
    let ml_plus = catalog::maclane(Sign::Plus).expected_lattice;
    let ml_minus = catalog::maclane(Sign::Minus).expected_lattice;
    let fs = catalog::falk_sturmfels(Sign::Plus).expected_lattice;
    let api = catalog::a_pm_i(Sign::Plus).expected_lattice;
    // A relabeling with no structure alignment to stress the backtracker.
    let perm = [7usize, 2, 5, 0, 3, 6, 1, 4, 8];
    let api_relabeled = api.relabel(&perm).unwrap();

    c.bench_function("iso/maclane_conjugates", |b| {
        b.iter(|| find_isomorphism(&ml_plus, &ml_minus).unwrap())
    });
    c.bench_function("iso/a_pm_i_relabeled", |b| {
        b.iter(|| find_isomorphism(&api, &api_relabeled).unwrap())
    });
    c.bench_function("iso/negative_fs_vs_a_pm_i", |b| {
        b.iter(|| assert!(find_isomorphism(&fs, &api).is_none()))
    });
}

fn bench_moduli(c: &mut Criterion) {
    let ml = catalog::maclane(Sign::Plus).expected_lattice;
    let fs = catalog::falk_sturmfels(Sign::Plus).expected_lattice;
    c.bench_function("moduli/maclane", |b| b.iter(|| solve_moduli(&ml).unwrap()));
    c.bench_function("moduli/falk_sturmfels", |b| b.iter(|| solve_moduli(&fs).unwrap()));
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("quadruple_case", |b| b.iter(enumerate_quadruple_case));
    group.bench_function("nine_three", |b| b.iter(enumerate_933));
    group.finish();
}

criterion_group!(benches, bench_isomorphism, bench_moduli, bench_census);
criterion_main!(benches);
