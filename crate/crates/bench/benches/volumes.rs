use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wpvol_bench::{genus0_volume, lift_input};
use wpvol_core::conerec::{genus0_lift, genus1_lift, seed_v11};
use wpvol_core::exactpoly::half_dimension;
use wpvol_core::mirzakhani::{moment_f, MirzakhaniTable, RecursionOptions};
use wpvol_core::store::StoreEntry;
use wpvol_core::symlift::{stratified_lift, sym_lift_zero};
use wpvol_core::Provenance;

fn lifts(c: &mut Criterion) {
    let mut group = c.benchmark_group("genus0_lift");
    for n in [5usize, 7, 9] {
        let v = genus0_volume(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &v, |b, v| b.iter(|| genus0_lift(black_box(v))));
    }
    group.finish();

    let mut v = seed_v11();
    for _ in 0..3 {
        v = genus1_lift(&v).unwrap().0;
    }
    c.bench_function("genus1_lift/4", |b| b.iter(|| genus1_lift(black_box(&v))));
}

fn symlift(c: &mut Criterion) {
    let mut group = c.benchmark_group("stratified_lift");
    for n in [6usize, 8] {
        let input = lift_input(n);
        let d = half_dimension(0, n + 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &input, |b, p| {
            b.iter(|| stratified_lift(black_box(p), d))
        });
    }
    group.finish();
    let f = genus0_volume(8);
    c.bench_function("sym_lift_zero/8", |b| b.iter(|| sym_lift_zero(black_box(f.poly()))));
}

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("mirzakhani");
    group.sample_size(10);
    for (g, n) in [(0u32, 7usize), (1, 4), (2, 2)] {
        group.bench_function(format!("{g}_{n}"), |b| {
            b.iter(|| MirzakhaniTable::new(RecursionOptions::default()).volume(g, n).unwrap())
        });
    }
    group.finish();
    c.bench_function("moment_f/12", |b| b.iter(|| moment_f(black_box(12))));
}

fn store(c: &mut Criterion) {
    let entry = StoreEntry::new(genus0_volume(9), Provenance::Genus0Lift);
    let text = entry.to_json().unwrap();
    c.bench_function("store/to_json/0_9", |b| b.iter(|| black_box(&entry).to_json()));
    c.bench_function("store/from_json/0_9", |b| b.iter(|| StoreEntry::from_json(black_box(&text))));
}

criterion_group!(benches, lifts, symlift, recursion, store);
criterion_main!(benches);
