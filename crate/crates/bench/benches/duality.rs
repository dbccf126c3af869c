use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sdl_core::category::{enumerate_categories, slice_semigroup};
use sdl_core::duality::{germ_category, verify_adjunction_category, verify_adjunction_semigroup};
use sdl_core::{classify, zoo};

const MAX: usize = 100_000;

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for n in 1..=3 {
        let s = zoo::gen_pt(n).unwrap();
        g.bench_with_input(BenchmarkId::new("pt", n), &s, |b, s| b.iter(|| classify(black_box(s))));
    }
    g.finish();
}

fn constructions(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for n in 2..=3 {
        let s = Arc::new(zoo::gen_pt(n).unwrap());
        g.bench_with_input(BenchmarkId::new("germs_pt", n), &s, |b, s| {
            b.iter(|| germ_category(black_box(s.clone())).unwrap())
        });
        let k = Arc::new(zoo::gen_pair_groupoid(n).unwrap());
        g.bench_with_input(BenchmarkId::new("slices_pair_groupoid", n), &k, |b, k| {
            b.iter(|| slice_semigroup(black_box(k.clone()), false, MAX).unwrap())
        });
    }
    g.finish();
}

fn adjunction(c: &mut Criterion) {
    let mut g = c.benchmark_group("adjunction");
    g.sample_size(20);
    let tri3 = Arc::new(zoo::gen_triangular(3).unwrap());
    g.bench_function("triangular3", |b| {
        b.iter(|| verify_adjunction_semigroup(black_box(tri3.clone()), MAX).unwrap())
    });
    let k3 = Arc::new(zoo::gen_pair_groupoid(3).unwrap());
    g.bench_function("pair_groupoid3", |b| {
        b.iter(|| verify_adjunction_category(black_box(k3.clone()), MAX).unwrap())
    });
    g.bench_function("enumerate_3_5", |b| b.iter(|| enumerate_categories(black_box(3), 5)));
    g.finish();
}

criterion_group!(benches, classification, constructions, adjunction);
criterion_main!(benches);
