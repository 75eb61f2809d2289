use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ppsign_core::exactalg::{det, pfaffian, pfaffian_elimination};
use ppsign_core::formulas::{thm3_structure_check, thm7_product};
use ppsign_core::lgv::lgv_count;
use ppsign_core::oracle::{signed_count, DEFAULT_NODE_BUDGET};
use ppsign_core::qseries::binom;
use ppsign_core::{BoxDims, ExactMatrix, SkewMatrix, SymmetryClass};

fn pascal(n: usize) -> ExactMatrix {
    ExactMatrix::from_int_fn(n, n, |i, j| binom((i + j) as i64, i as i64))
}

fn skew(n: usize) -> SkewMatrix {
    let m = ExactMatrix::from_int_fn(n, n, |i, j| {
        let v = binom((i + j) as i64, i as i64) + (i * 7 + j * 3) as i64 % 5;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => 0.into(),
            std::cmp::Ordering::Greater => -binom((i + j) as i64, j as i64) - (j * 7 + i * 3) as i64 % 5,
        }
    });
    SkewMatrix::new(m).unwrap()
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("det");
    for n in [8, 16, 32] {
        let m = pascal(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| det(black_box(m)).unwrap()));
    }
    g.finish();
}

fn pfaffians(c: &mut Criterion) {
    let mut g = c.benchmark_group("pfaffian");
    for n in [8, 16, 32] {
        let m = skew(n);
        g.bench_with_input(BenchmarkId::new("default", n), &m, |b, m| b.iter(|| pfaffian(black_box(m)).unwrap()));
        g.bench_with_input(BenchmarkId::new("elimination", n), &m, |b, m| {
            b.iter(|| pfaffian_elimination(black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("count");
    g.sample_size(10);
    let cases = [
        ("tc", SymmetryClass::TransposeComplementary, BoxDims::new(4, 4, 6)),
        ("sc", SymmetryClass::SelfComplementary, BoxDims::new(4, 4, 4)),
        ("cssc", SymmetryClass::CyclicallySymmetricSelfComplementary, BoxDims::cube(6)),
    ];
    for (name, class, bx) in cases {
        g.bench_function(BenchmarkId::new("oracle", name), |b| {
            b.iter(|| signed_count(black_box(bx), class, DEFAULT_NODE_BUDGET).unwrap())
        });
        if class != SymmetryClass::CyclicallySymmetricSelfComplementary {
            g.bench_function(BenchmarkId::new("lgv", name), |b| b.iter(|| lgv_count(class, black_box(bx)).unwrap()));
        }
    }
    g.bench_function("cssc-product-12", |b| b.iter(|| thm7_product(black_box(12)).unwrap()));
    g.bench_function("odd-stc-structure-3", |b| {
        b.iter(|| thm3_structure_check(black_box(3), &(0..12).map(|k| 2 * k + 1).collect::<Vec<_>>()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, determinants, pfaffians, counts);
criterion_main!(benches);
