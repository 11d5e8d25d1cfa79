use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use bihom_bench::{entries_of_dim, random_matrix};
use bihom_core::axioms::{check_bihom_superdialgebra, CheckOptions};
use bihom_core::derivations::{brute_force_derivations, solve_dialgebra_derivations, SignConvention, Signature};
use bihom_core::{Field, Parity};

fn rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [8, 16, 32] {
        let q = random_matrix(Field::Rational, n, n + 4, n as u64);
        g.bench_with_input(BenchmarkId::new("Q", n), &q, |b, m| b.iter(|| black_box(m.rref())));
        let fp = random_matrix(Field::prime(101).unwrap(), n, n + 4, n as u64);
        g.bench_with_input(BenchmarkId::new("F101", n), &fp, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
}

fn checker(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_bihom_superdialgebra");
    for dim in [2, 3, 4] {
        let entries = entries_of_dim(Field::Rational, dim, 4);
        g.bench_with_input(BenchmarkId::from_parameter(dim), &entries, |b, es| {
            b.iter(|| {
                for e in es {
                    black_box(check_bihom_superdialgebra(&e.instance, CheckOptions::default()));
                }
            })
        });
    }
    g.finish();
}

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_dialgebra_derivations");
    let sig = Signature::new(0, 1, Parity::Even);
    for dim in [2, 3, 4] {
        let entries = entries_of_dim(Field::Rational, dim, 4);
        g.bench_with_input(BenchmarkId::from_parameter(dim), &entries, |b, es| {
            b.iter(|| {
                for e in es {
                    black_box(solve_dialgebra_derivations(&e.instance, sig, SignConvention::Standard).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force_derivations_F5");
    g.sample_size(10);
    let sig = Signature::new(0, 0, Parity::Even);
    let entries = entries_of_dim(Field::prime(5).unwrap(), 2, 4);
    g.bench_function("dim2", |b| {
        b.iter(|| {
            for e in &entries {
                black_box(brute_force_derivations(&e.instance, sig, SignConvention::Standard).unwrap());
            }
        })
    });
    g.finish();
}

criterion_group!(benches, rref, checker, solver, oracle);
criterion_main!(benches);
