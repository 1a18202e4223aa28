use classicalnf::classical_normal_form;
use classicalnf::fixtures::{ks_k1, ks_reconciled};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use exactpoly::par::{self, Mode};
use hopfnf::checks;
use hypernf::{simplest_normal_form, Style, Truncation};
use std::hint::black_box;

const MODES: [(&str, Mode); 2] = [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)];

fn structure_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_oracle");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 4), &4, |b, &k| {
            b.iter(|| par::with_mode(mode, || black_box(checks::structure_oracle(k))))
        });
    }
    g.finish();
}

fn ks_first_level(c: &mut Criterion) {
    let sys = ks_reconciled().unwrap().system;
    let mut g = c.benchmark_group("ks_first_level");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| par::with_mode(mode, || black_box(classical_normal_form(&sys, 6).unwrap()))));
    }
    g.finish();
}

fn ks_hypernormal(c: &mut Criterion) {
    let k1 = ks_k1();
    let mut g = c.benchmark_group("ks_hypernormal");
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| par::with_mode(mode, || black_box(simplest_normal_form(&k1, Style::I, Truncation::Degree(6)).unwrap())))
        });
    }
    g.finish();
}

fn vanishing_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("vanishing_sweep");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| par::with_mode(mode, || black_box(checks::vanishing_patterns(1, 6, 1)))));
    }
    g.finish();
}

criterion_group!(benches, structure_oracle, ks_first_level, ks_hypernormal, vanishing_sweep);
criterion_main!(benches);
