//! Benchmarks for the hot paths: field arithmetic, single-word weights,
//! whole-code profiles, generalized-weight routes, and factorization.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use bsym_core::code::CyclicCode;
use bsym_core::factor::factor_xn_minus_1;
use bsym_core::hierarchy::{ghw_column, ghw_subcode, profile_code};
use bsym_core::metrics::{w_b_direct, w_b_via_span, RunDistribution};
use bsym_core::{Budget, Field};

fn field_mul(c: &mut Criterion) {
    let f8 = Field::with_order(8).unwrap();
    let f13 = Field::with_order(13).unwrap();
    c.bench_function("field_mul_gf8_all_pairs", |bench| {
        bench.iter(|| {
            let mut acc = 0u32;
            for a in 0..8u8 {
                for b in 0..8u8 {
                    acc += f8.mul(black_box(a), black_box(b)) as u32;
                }
            }
            acc
        })
    });
    c.bench_function("field_inv_gf13_all", |bench| {
        bench.iter(|| {
            let mut acc = 0u32;
            for a in 1..13u8 {
                acc += f13.inv(black_box(a)) as u32;
            }
            acc
        })
    });
}

fn word_weights(c: &mut Criterion) {
    let field = Field::with_order(3).unwrap();
    // A fixed 24-symbol word with mixed run lengths.
    let word: Vec<u8> = vec![
        0, 1, 0, 0, 2, 2, 0, 0, 0, 1, 0, 2, 1, 0, 0, 0, 0, 2, 0, 1, 1, 0, 0, 2,
    ];
    c.bench_function("w_b_direct_b4_n24", |bench| {
        bench.iter(|| w_b_direct(black_box(&word), 4).unwrap())
    });
    c.bench_function("w_b_runs_all_b_n24", |bench| {
        bench.iter(|| RunDistribution::new(black_box(&word)).weights())
    });
    c.bench_function("w_b_span_b4_n24", |bench| {
        bench.iter(|| w_b_via_span(&field, black_box(&word), 4, 1 << 20).unwrap())
    });
}

fn code_profile(c: &mut Criterion) {
    let budget = Budget::default();
    let hamming = CyclicCode::parse("q=2;n=7;g=1101").unwrap();
    let long = CyclicCode::parse("q=2;n=15;g=10011").unwrap();
    c.bench_function("profile_hamming_7_4", |bench| {
        bench.iter(|| profile_code(hamming.linear(), &budget).unwrap())
    });
    c.bench_function("profile_binary_n15_k11", |bench| {
        bench.iter(|| profile_code(long.linear(), &budget).unwrap())
    });
}

fn ghw_routes(c: &mut Criterion) {
    let budget = Budget::default();
    let hamming = CyclicCode::parse("q=2;n=7;g=1101").unwrap();
    c.bench_function("ghw_subcode_hamming_r2", |bench| {
        bench.iter_batched(
            || hamming.linear().clone(),
            |lin| ghw_subcode(&lin, 2, &budget).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("ghw_column_hamming_r2", |bench| {
        bench.iter_batched(
            || hamming.linear().clone(),
            |lin| ghw_column(&lin, 2, &budget).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn factorization(c: &mut Criterion) {
    let f2 = Field::with_order(2).unwrap();
    let f4 = Field::with_order(4).unwrap();
    c.bench_function("factor_x15_minus_1_gf2", |bench| {
        bench.iter(|| factor_xn_minus_1(black_box(&f2), 15).unwrap())
    });
    c.bench_function("factor_x45_minus_1_gf4", |bench| {
        bench.iter(|| factor_xn_minus_1(black_box(&f4), 45).unwrap())
    });
}

criterion_group!(
    benches,
    field_mul,
    word_weights,
    code_profile,
    ghw_routes,
    factorization
);
criterion_main!(benches);
