use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homlie::catalog::{plus_part, plus_part_dual};
use homlie::geometry::{check_symplectic, levi_civita};
use homlie::homalg::hom_bianchi_defect;
use homlie::int;
use homlie::parakahler::theorem_battery;
use homlie::phasespace::{canonical_forms, extend_product, extract_phase_space};
use homlie_bench::{dense_algebra, example, unipotent};

fn example_pipelines(c: &mut Criterion) {
    let data = example();
    let k = data.structure();
    c.bench_function("hom-Lie check", |b| b.iter(|| black_box(data.algebra.check())));
    c.bench_function("symplectic check", |b| {
        b.iter(|| check_symplectic(black_box(&data.algebra), &data.omega).unwrap())
    });
    c.bench_function("levi-civita", |b| {
        b.iter(|| levi_civita(black_box(&data.algebra), &data.metric).unwrap())
    });
    c.bench_function("theorem battery", |b| {
        b.iter(|| theorem_battery(black_box(&data.algebra), &data.metric, &k).unwrap())
    });
    c.bench_function("phase space extract", |b| {
        b.iter(|| extract_phase_space(black_box(&data.algebra), &data.metric, &k).unwrap())
    });
    let bundle = extend_product(&plus_part(int(1)), &plus_part_dual()).unwrap();
    c.bench_function("phase space certificate", |b| {
        b.iter(|| canonical_forms(black_box(&bundle)).unwrap())
    });
}

fn scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("scaling");
    for n in [2, 4, 6] {
        let algebra = dense_algebra(n);
        group.bench_with_input(BenchmarkId::new("hom-Bianchi", n), &algebra, |b, a| {
            b.iter(|| hom_bianchi_defect(black_box(a)))
        });
        let p = unipotent(2 * n);
        group.bench_with_input(BenchmarkId::new("inverse", 2 * n), &p, |b, p| {
            b.iter(|| black_box(p).inverse().unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, example_pipelines, scaling);
criterion_main!(benches);
