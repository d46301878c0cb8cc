use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cliffspin_core::classification::{
    bracket_basis, build_bracket, classify_complex, count_embeddings, emit_table, TableKind,
};
use cliffspin_core::clifford::build;
use cliffspin_core::invariants::{admissible_basis, invariant_forms};
use cliffspin_core::linalg::commutant_basis;
use cliffspin_core::oracle;
use cliffspin_core::Rational;

fn modules(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for (p, q) in [(3, 3), (0, 7), (4, 4), (1, 8)] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{p},{q}")),
            &(p, q),
            |b, &(p, q)| b.iter(|| build(black_box(p), black_box(q)).unwrap()),
        );
    }
    g.finish();
}

fn forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("forms");
    for (p, q) in [(2, 2), (1, 5), (4, 4)] {
        let m = build(p, q).unwrap();
        let id = format!("{p},{q}");
        g.bench_function(BenchmarkId::new("invariant_forms", &id), |b| {
            b.iter(|| invariant_forms(black_box(&m)))
        });
        g.bench_function(BenchmarkId::new("admissible_basis", &id), |b| {
            b.iter(|| admissible_basis(black_box(&m)).unwrap())
        });
        g.bench_function(BenchmarkId::new("count_embeddings", &id), |b| {
            b.iter(|| count_embeddings(black_box(&m)).unwrap())
        });
    }
    let m = build(3, 3).unwrap();
    g.bench_function("commutant (3,3)", |b| {
        b.iter(|| commutant_basis(black_box(&m.gammas), m.dim()).unwrap())
    });
    g.finish();
}

fn oracle_and_jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    let m = build(2, 3).unwrap();
    g.bench_function("oracle (2,3)", |b| {
        b.iter(|| oracle::compare(black_box(&m)).unwrap())
    });
    let m = build(2, 2).unwrap();
    let coeffs: Vec<Rational> = (1..=bracket_basis(&m, 1).unwrap().len() as i64)
        .map(Rational::from_int)
        .collect();
    let alg = build_bracket(&m, &coeffs, 1).unwrap();
    g.bench_function("jacobi (2,2)", |b| b.iter(|| alg.verify_jacobi()));
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("tables");
    g.sample_size(10);
    g.bench_function("pairs max_n 6", |b| {
        b.iter(|| emit_table(black_box(6), TableKind::Pairs).unwrap())
    });
    g.bench_function("complex m 1..6", |b| {
        b.iter(|| {
            (1..=6)
                .map(|m| classify_complex(m).unwrap())
                .collect::<Vec<_>>()
        })
    });
    g.finish();
}

criterion_group!(benches, modules, forms, oracle_and_jacobi, tables);
criterion_main!(benches);
