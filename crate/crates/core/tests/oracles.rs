//! Independent oracles: every routine here recomputes a library result
//! from first principles, sharing no code with the implementation under
//! test beyond the field tables.

use std::collections::BTreeSet;
use std::sync::Arc;

use bsym_core::code::CyclicCode;
use bsym_core::factor::{cyclotomic_cosets, factor_xn_minus_1};
use bsym_core::hierarchy::{ghw_column, ghw_subcode};
use bsym_core::metrics::{self, RunDistribution};
use bsym_core::{Budget, Field, Poly};

/// Weight by the raw definition: count cyclic windows that contain any
/// nonzero symbol, scanning each window in full.
fn naive_w_b(word: &[u8], b: usize) -> usize {
    let n = word.len();
    (0..n)
        .filter(|&t| (0..b).any(|j| word[(t + j) % n] != 0))
        .count()
}

#[test]
fn window_definition_agrees_with_every_route_exhaustively() {
    for (q, n_max) in [(2u64, 8usize), (3, 5)] {
        let field = Field::with_order(q).unwrap();
        for n in 1..=n_max {
            let total = q.pow(n as u32);
            for code in 0..total {
                let mut word = vec![0u8; n];
                let mut c = code;
                for slot in word.iter_mut() {
                    *slot = (c % q) as u8;
                    c /= q;
                }
                let runs = RunDistribution::new(&word);
                for b in 1..=n {
                    let expected = naive_w_b(&word, b);
                    assert_eq!(metrics::w_b_direct(&word, b).unwrap(), expected);
                    assert_eq!(runs.weight(b).unwrap(), expected);
                    assert_eq!(metrics::b_support(&word, b).unwrap().len(), expected);
                    if (q as u128).pow(b as u32) <= 1 << 10 {
                        assert_eq!(
                            metrics::w_b_via_span(&field, &word, b, 1 << 10).unwrap(),
                            expected
                        );
                    }
                }
            }
        }
    }
}

/// Period by trial division: the least e with f | x^e - 1.
fn naive_period(f: &Poly) -> u64 {
    let field = f.field().clone();
    let bound = (field.q() as u64).pow(f.deg().unwrap() as u32);
    (1..=bound)
        .find(|&e| f.divides(&Poly::xn_minus_1(field.clone(), e as usize)))
        .expect("an irreducible polynomial away from x divides some x^e - 1")
}

#[test]
fn period_matches_trial_division() {
    let cases = [
        (2u64, "11"),
        (2, "1101"),
        (2, "1011"),
        (2, "11111"),
        (2, "101001"),
        (3, "11"),
        (3, "21"),
        (3, "101"),
        (3, "1021"),
        (4, "121"),
        (4, "131"),
        (5, "12"),
        (5, "102"),
    ];
    for (q, text) in cases {
        let field = Field::with_order(q).unwrap();
        let f = Poly::parse(field, text).unwrap();
        assert_eq!(f.period().unwrap(), naive_period(&f), "period of {text} over GF({q})");
    }
}

#[test]
fn cosets_partition_and_close_under_multiplication() {
    for (n, q) in [(7usize, 2u64), (15, 2), (21, 2), (4, 3), (13, 3), (8, 3), (5, 4), (15, 4), (24, 5)] {
        let cosets = cyclotomic_cosets(n, q).unwrap();
        let mut seen = BTreeSet::new();
        for coset in &cosets {
            // Closure: multiplying by q permutes the coset.
            let as_set: BTreeSet<usize> = coset.iter().copied().collect();
            assert_eq!(as_set.len(), coset.len());
            for &s in coset {
                assert!(as_set.contains(&(s * q as usize % n)));
                assert!(seen.insert(s), "residue {s} appears twice");
            }
            // Minimality: the orbit of any member is the whole coset.
            let mut orbit = BTreeSet::new();
            let mut cur = coset[0];
            while orbit.insert(cur) {
                cur = cur * q as usize % n;
            }
            assert_eq!(orbit, as_set);
        }
        let expected: BTreeSet<usize> = (0..n).collect();
        assert_eq!(seen, expected, "cosets must cover 0..{n}");
    }
}

/// Irreducibility by brute force: no monic divisor of degree 1 through
/// deg/2, enumerating every candidate.
fn naive_irreducible(f: &Poly) -> bool {
    let field = f.field().clone();
    let q = field.q() as u64;
    let deg = f.deg().unwrap();
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for code in 0..q.pow(d as u32) {
            let mut coeffs = vec![0u8; d + 1];
            coeffs[d] = 1;
            let mut c = code;
            for slot in coeffs.iter_mut().take(d) {
                *slot = (c % q) as u8;
                c /= q;
            }
            let candidate = Poly::new(field.clone(), coeffs).unwrap();
            if candidate.divides(f) {
                return false;
            }
        }
    }
    true
}

#[test]
fn factorizations_multiply_back_and_are_irreducible() {
    for (q, n_max) in [(2u64, 16usize), (3, 13), (4, 10), (5, 8)] {
        let field = Field::with_order(q).unwrap();
        for n in 1..=n_max {
            let factors = factor_xn_minus_1(&field, n).unwrap();
            let mut product = Poly::one(field.clone());
            for (f, mult) in &factors {
                assert!(f.is_monic());
                for _ in 0..*mult {
                    product = product.mul(f);
                }
                if (q as u128).pow((f.deg().unwrap() / 2) as u32) <= 1 << 10 {
                    assert!(naive_irreducible(f), "{f} over GF({q}) must be irreducible");
                }
            }
            assert_eq!(product, Poly::xn_minus_1(field.clone(), n));
            // Distinct factors, sorted by degree then coefficient code.
            let keys: Vec<(usize, Vec<u8>)> = factors
                .iter()
                .map(|(f, _)| (f.deg().unwrap(), f.coeffs().iter().rev().copied().collect()))
                .collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(keys.len(), sorted.len(), "repeated factor at q={q}, n={n}");
            assert_eq!(keys, sorted, "canonical order broken at q={q}, n={n}");
        }
    }
}

#[test]
fn frozen_factor_lists() {
    let f2 = Field::with_order(2).unwrap();
    let names: Vec<String> = factor_xn_minus_1(&f2, 7)
        .unwrap()
        .iter()
        .map(|(f, _)| f.to_string())
        .collect();
    assert_eq!(names, ["11", "1101", "1011"]);

    let f3 = Field::with_order(3).unwrap();
    let names: Vec<String> = factor_xn_minus_1(&f3, 4)
        .unwrap()
        .iter()
        .map(|(f, _)| f.to_string())
        .collect();
    assert_eq!(names, ["11", "21", "101"]);

    let f4 = Field::with_order(4).unwrap();
    let names: Vec<String> = factor_xn_minus_1(&f4, 5)
        .unwrap()
        .iter()
        .map(|(f, _)| f.to_string())
        .collect();
    assert_eq!(names, ["11", "121", "131"]);
}

/// Rank of a set of words by plain elimination, written against the raw
/// field operations.
#[allow(clippy::needless_range_loop)]
fn naive_rank(field: &Arc<Field>, rows: &[Vec<u8>]) -> usize {
    let mut mat: Vec<Vec<u8>> = rows.to_vec();
    let mut rank = 0;
    let width = mat.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(pivot) = (rank..mat.len()).find(|&i| mat[i][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let lead = mat[rank][col];
        for i in 0..mat.len() {
            if i != rank && mat[i][col] != 0 {
                let factor = field.div(mat[i][col], lead);
                for j in 0..width {
                    let scaled = field.mul(factor, mat[rank][j]);
                    mat[i][j] = field.sub(mat[i][j], scaled);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The r-th generalized weight by the definition: minimum support union
/// over all rank-r tuples of codewords.
fn naive_ghw(code: &CyclicCode, r: usize) -> usize {
    let field = code.field().clone();
    let lin = code.linear();
    let mut words: Vec<Vec<u8>> = Vec::new();
    lin.for_each_codeword(|_, w| {
        if w.iter().any(|&s| s != 0) {
            words.push(w.to_vec());
        }
    });
    let mut best = usize::MAX;
    let mut chosen = vec![0usize; r];
    fn rec(
        words: &[Vec<u8>],
        field: &Arc<Field>,
        chosen: &mut Vec<usize>,
        depth: usize,
        start: usize,
        best: &mut usize,
    ) {
        let r = chosen.len();
        if depth == r {
            let rows: Vec<Vec<u8>> = chosen.iter().map(|&i| words[i].clone()).collect();
            if naive_rank(field, &rows) == r {
                let n = rows[0].len();
                let support = (0..n).filter(|&j| rows.iter().any(|w| w[j] != 0)).count();
                *best = (*best).min(support);
            }
            return;
        }
        for i in start..words.len() {
            chosen[depth] = i;
            rec(words, field, chosen, depth + 1, i + 1, best);
        }
    }
    rec(&words, &field, &mut chosen, 0, 0, &mut best);
    best
}

#[test]
fn generalized_weights_match_the_definition() {
    let budget = Budget::default();
    for descriptor in ["q=2;n=7;g=1101", "q=2;n=7;g=11101", "q=3;n=4;g=201", "q=4;n=5;g=1221"] {
        let code = CyclicCode::parse(descriptor).unwrap();
        for r in 1..=code.k() {
            let expected = naive_ghw(&code, r);
            assert_eq!(
                ghw_subcode(code.linear(), r, &budget).unwrap(),
                expected,
                "subcode route at r={r} on {descriptor}"
            );
            assert_eq!(
                ghw_column(code.linear(), r, &budget).unwrap(),
                expected,
                "column route at r={r} on {descriptor}"
            );
        }
    }
}

/// The b-symbol distance by the definition: minimum naive window weight
/// over all nonzero codewords.
fn naive_d_b(code: &CyclicCode, b: usize) -> usize {
    let mut best = usize::MAX;
    code.linear().for_each_codeword(|_, w| {
        if w.iter().any(|&s| s != 0) {
            best = best.min(naive_w_b(w, b));
        }
    });
    best
}

#[test]
fn frozen_hierarchies_match_the_definition() {
    let hamming = CyclicCode::parse("q=2;n=7;g=1101").unwrap();
    let simplex = CyclicCode::parse("q=2;n=7;g=11101").unwrap();
    let full = CyclicCode::parse("q=2;n=3;g=1").unwrap();
    for (code, expected) in [
        (&hamming, vec![3, 5, 6, 7, 7, 7, 7]),
        (&simplex, vec![4, 6, 7, 7, 7, 7, 7]),
        (&full, vec![1, 2, 3]),
    ] {
        let got: Vec<usize> = (1..=code.n()).map(|b| naive_d_b(code, b)).collect();
        assert_eq!(got, expected, "{}", code.descriptor());
        let profile =
            bsym_core::hierarchy::profile_code(code.linear(), &Budget::default()).unwrap();
        assert_eq!(profile.d, expected, "{}", code.descriptor());
    }
}
