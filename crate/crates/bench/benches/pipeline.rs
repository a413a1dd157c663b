use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gitquot::lattice::{enumerate_nonneg_solutions, hermite_normal_form};
use gitquot::quotient::{quotient_report, sweep, ActionData, Mode, DEFAULT_DEGREE_BOUND};
use gitquot::{IntMatrix, LatticeVector};

fn two_torus(alpha: &[i64]) -> ActionData {
    ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], alpha).unwrap()
}

fn lattice(c: &mut Criterion) {
    let m = IntMatrix::from_i64_rows(&[[4, -6, 9, 2, 7], [3, 5, -2, 8, 1], [-7, 2, 6, 1, 5]]).unwrap();
    c.bench_function("hnf_3x5", |b| b.iter(|| hermite_normal_form(black_box(&m))));

    let a = IntMatrix::from_i64_rows(&[[1, 1, 1, 1], [0, 0, 1, -1]]).unwrap();
    let rhs = LatticeVector::from_i64s(&[12, 4]);
    c.bench_function("enumerate_degree_4_slice", |b| {
        b.iter(|| enumerate_nonneg_solutions(black_box(&a), black_box(&rhs)).unwrap())
    });
}

fn pipeline(c: &mut Criterion) {
    let a = two_torus(&[3, 1]);
    c.bench_function("quotient_report_two_torus", |b| {
        b.iter(|| quotient_report(black_box(&a), Mode::Polynomial, DEFAULT_DEGREE_BOUND).unwrap())
    });
    let wps = ActionData::from_i64s(&[&[1, 2, 3]], &[6]).unwrap();
    c.bench_function("quotient_report_wps123", |b| {
        b.iter(|| quotient_report(black_box(&wps), Mode::Polynomial, DEFAULT_DEGREE_BOUND).unwrap())
    });
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("two_torus_box", |b| {
        b.iter(|| sweep(black_box(&a), &[(1, 4), (-2, 2)], Mode::Polynomial, DEFAULT_DEGREE_BOUND).unwrap())
    });
    group.finish();
}

criterion_group!(benches, lattice, pipeline);
criterion_main!(benches);
