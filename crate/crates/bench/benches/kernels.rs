use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use octic_bench::{catalogue, generic_planes, plane_fixtures};
use octic_core::resolution::BranchLocus;
use octic_core::{analyze, enumerate_descriptors, euler_main, run, EnumerationBounds, LedgerState};

fn bench_analyze(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    for n in [8, 16, 32] {
        let planes = generic_planes(n);
        group.bench_with_input(BenchmarkId::new("generic", n), &planes, |b, p| {
            b.iter(|| analyze(black_box(p)).unwrap())
        });
    }
    for (name, planes) in plane_fixtures().into_iter().filter(|(n, _)| !n.starts_with("planes-")) {
        group.bench_with_input(BenchmarkId::new("fixture", &name), &planes, |b, p| {
            b.iter(|| analyze(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn bench_closed_form(c: &mut Criterion) {
    let rows = catalogue();
    c.bench_function("euler_main/catalogue", |b| {
        b.iter(|| {
            rows.iter()
                .map(|d| euler_main(black_box(d)).unwrap().value)
                .sum::<i64>()
        })
    });
}

fn bench_ledger(c: &mut Criterion) {
    let mut group = c.benchmark_group("ledger");
    let states: Vec<LedgerState> = catalogue()
        .iter()
        .map(|d| LedgerState::from_descriptor(d).unwrap())
        .collect();
    group.bench_function("run/catalogue", |b| {
        b.iter(|| states.iter().map(|s| run(black_box(s)).unwrap().result.value).sum::<i64>())
    });
    for (name, planes) in plane_fixtures() {
        let report = analyze(&planes).unwrap();
        let Ok(locus) = BranchLocus::from_report(&report) else {
            continue;
        };
        group.bench_with_input(BenchmarkId::new("resolve", &name), &locus, |b, l| {
            b.iter(|| l.resolve().map(|r| r.run.result.value).ok())
        });
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let bounds = EnumerationBounds::catalogue_ranges();
    c.bench_function("enumerate/catalogue_ranges", |b| {
        b.iter(|| enumerate_descriptors(black_box(&bounds)).count())
    });
}

criterion_group!(benches, bench_analyze, bench_closed_form, bench_ledger, bench_enumerate);
criterion_main!(benches);
