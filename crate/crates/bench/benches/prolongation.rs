use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use glap_core::analysis::{is_semisimple, killing_form};
use glap_core::composition::AlgebraTag;
use glap_core::families::{build, FamilySpec};
use glap_core::prolongation::{conformal_g0, full_prolongation};
use glap_core::roots::{positive_roots, CartanType};

fn families() -> Vec<FamilySpec> {
    vec![
        FamilySpec::Hk {
            algebra: AlgebraTag::Complex,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: AlgebraTag::Quaternion,
            p: 1,
            q: 2,
        },
        FamilySpec::Bi { l: 3 },
        FamilySpec::G2,
        FamilySpec::Octonionic { split: false },
    ]
}

fn bench_prolongation(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_prolongation");
    group.sample_size(20);
    for spec in families() {
        let b = build(&spec).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(spec.to_string()),
            &b,
            |bench, b| {
                bench.iter(|| full_prolongation(black_box(&b.m), black_box(&b.form)).unwrap())
            },
        );
    }
    group.finish();
}

fn bench_g0(c: &mut Criterion) {
    let b = build(&FamilySpec::Octonionic { split: true }).unwrap();
    c.bench_function("conformal_g0/(HO')", |bench| {
        bench.iter(|| conformal_g0(black_box(&b.m), black_box(&b.form)).unwrap())
    });
}

fn bench_analysis(c: &mut Criterion) {
    let b = build(&FamilySpec::Octonionic { split: false }).unwrap();
    let full = full_prolongation(&b.m, &b.form).unwrap().full;
    c.bench_function("killing_form/F4", |bench| {
        bench.iter(|| killing_form(black_box(&full)))
    });
    c.bench_function("is_semisimple/F4", |bench| {
        bench.iter(|| is_semisimple(black_box(&full)))
    });
}

fn bench_roots(c: &mut Criterion) {
    c.bench_function("positive_roots/F4", |bench| {
        bench.iter(|| positive_roots(black_box(CartanType::F4), 4).unwrap())
    });
}

criterion_group!(
    benches,
    bench_prolongation,
    bench_g0,
    bench_analysis,
    bench_roots
);
criterion_main!(benches);
