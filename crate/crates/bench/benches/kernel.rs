use std::hint::black_box;

use cevian_bench::{witness, witness_on_curve};
use cevian_core::construct::{self, Orientation};
use cevian_core::locus;
use cevian_core::triangle::{build_config, halfturn_report};
use criterion::{criterion_group, criterion_main, Criterion};

fn configs(c: &mut Criterion) {
    let p = witness();
    c.bench_function("build_config/sqrt19", |b| b.iter(|| build_config(black_box(&p)).unwrap()));
    let cfg = build_config(&p).unwrap();
    c.bench_function("halfturn_report/sqrt19", |b| b.iter(|| halfturn_report(black_box(&cfg)).unwrap()));
}

fn curve(c: &mut Criterion) {
    let p = witness_on_curve();
    c.bench_function("scalar_mul/12", |b| b.iter(|| locus::scalar_mul(black_box(12), &p).unwrap()));
    c.bench_function("order_of/bound-20", |b| b.iter(|| locus::order_of(&locus::named::b(), black_box(20)).unwrap()));
}

fn sampling(c: &mut Criterion) {
    let scene = construct::make_scene().unwrap();
    let mut group = c.benchmark_group("sample_locus");
    group.sample_size(10);
    for n in [10, 100] {
        group.bench_function(format!("n={n}"), |b| {
            b.iter(|| construct::sample_locus(&scene, black_box(n), Orientation::Both).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, configs, curve, sampling);
criterion_main!(benches);
