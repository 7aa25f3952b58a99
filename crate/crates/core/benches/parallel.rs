//! Parallel vs sequential comparison for the three hot loops: linear
//! extension folding, the w1-monomial census, and stability sampling.
//!
//! The parallel paths are only compiled with the `parallel` feature (default);
//! without it the benches still run the sequential cores.

use criterion::{criterion_group, criterion_main, Criterion};
use peulerian_core::eulerian;
use peulerian_core::permstat::{ascent_bottom_mask, descent_bottom_mask};
use peulerian_core::polyring::ZSet;
use peulerian_core::poset::LabeledPoset;
use peulerian_core::stability::{check_stable, Region};
use peulerian_core::verify::{distinct_w1_count, distinct_w1_count_seq};
use std::hint::black_box;

fn bench_extensions(c: &mut Criterion) {
    let poset = LabeledPoset::antichain(8);
    let mut group = c.benchmark_group("extension-fold/antichain8");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            let counts = poset.fold_extensions_seq(|w| ZSet {
                unprimed: descent_bottom_mask(w),
                primed: ascent_bottom_mask(w),
            });
            black_box(counts.len())
        })
    });
    group.bench_function("dispatch", |b| {
        b.iter(|| {
            let counts = poset.fold_extensions(|w| ZSet {
                unprimed: descent_bottom_mask(w),
                primed: ascent_bottom_mask(w),
            });
            black_box(counts.len())
        })
    });
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("w1-census/S8");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| black_box(distinct_w1_count_seq(8)))
    });
    group.bench_function("dispatch", |b| {
        b.iter(|| black_box(distinct_w1_count(8)))
    });
    group.finish();
}

fn bench_sampling(c: &mut Criterion) {
    let forest = LabeledPoset::from_covers(6, &[(1, 3), (2, 3), (4, 5), (3, 6), (5, 6)]).unwrap();
    let poly = eulerian::multivariate_eulerian(&forest);
    let mut group = c.benchmark_group("stability-sampling/forest6");
    group.sample_size(10);
    group.bench_function("budget-20k", |b| {
        b.iter(|| {
            black_box(check_stable(
                &poly,
                Region::UpperHalfPlane,
                20_000,
                11,
            ))
        })
    });
    group.finish();
}

criterion_group!(benches, bench_extensions, bench_census, bench_sampling);
criterion_main!(benches);
