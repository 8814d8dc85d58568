//! Compare the rayon-parallel sweeps against their sequential twins.

use criterion::{criterion_group, criterion_main, Criterion};
use raagcoh::sweep;

fn bench_cup_formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("cup_formula_sweep_d5");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| sweep::cup_formula_sweep(5, &[2, 3]))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sweep::cup_formula_sweep_seq(5, &[2, 3]))
    });
    group.finish();
}

fn bench_chordal_ledgers(c: &mut Criterion) {
    let mut group = c.benchmark_group("chordal_ledger_sweep_d6");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| sweep::chordal_ledger_sweep(6, &[2], true))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sweep::chordal_ledger_sweep_seq(6, &[2], true))
    });
    group.finish();
}

fn bench_witness_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_agreement_d2");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| sweep::search_agreement_sweep(2))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sweep::search_agreement_sweep_seq(2))
    });
    group.finish();
}

criterion_group!(benches, bench_cup_formula, bench_chordal_ledgers, bench_witness_search);
criterion_main!(benches);
