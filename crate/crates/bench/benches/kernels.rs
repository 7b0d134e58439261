use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use howe_bench::{label, partition, FULL};
use howe_core::characters::{char_w, fock_rhs, CharacterContext};
use howe_core::hookschur::cauchy_lhs;
use howe_core::oscillator::{certify, joint_hwv_kernel};
use howe_core::symfunc::{lr_coefficient, lr_product};
use std::hint::black_box;

fn littlewood_richardson(c: &mut Criterion) {
    let (lam, mu, nu) = (partition(&[4, 3, 2, 1]), partition(&[3, 2, 1]), partition(&[2, 1, 1]));
    c.bench_function("lr_coefficient (4,3,2,1)/(3,2,1)", |b| {
        b.iter(|| lr_coefficient(black_box(&lam), black_box(&mu), black_box(&nu)))
    });
    c.bench_function("lr_product (3,2,1)x(2,1,1)", |b| {
        b.iter(|| lr_product(black_box(&mu), black_box(&nu), 6))
    });
}

fn characters(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_w");
    for trunc in [3u32, 5] {
        let cc = CharacterContext::new(FULL, trunc).unwrap();
        let lam = label(&[1, -1]);
        group.bench_with_input(BenchmarkId::from_parameter(trunc), &trunc, |b, _| {
            b.iter(|| char_w(black_box(&lam), &cc).unwrap())
        });
    }
    group.finish();
    c.bench_function("cauchy_lhs (2,1,2) N=6", |b| {
        b.iter(|| cauchy_lhs(2, 1, 2, black_box(6)))
    });
    let cc = CharacterContext::new(FULL, 4).unwrap();
    c.bench_function("fock_rhs N=4", |b| b.iter(|| fock_rhs(black_box(&cc)).unwrap()));
}

fn oscillator(c: &mut Criterion) {
    let mut group = c.benchmark_group("joint_hwv_kernel");
    group.sample_size(20);
    for degree in [2u32, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &deg| {
            b.iter(|| joint_hwv_kernel(&FULL, deg).unwrap())
        });
    }
    group.finish();
    let lam = label(&[2, -1]);
    c.bench_function("certify (2,-1)", |b| {
        b.iter(|| certify(black_box(&lam), &FULL).unwrap())
    });
}

criterion_group!(benches, littlewood_richardson, characters, oscillator);
criterion_main!(benches);
