//! b-symbol weights of a single word, by several independent routes.
//!
//! A word is a cyclic vector over GF(q), stored as element codes. The
//! b-symbol weight w_b counts starting positions t whose cyclic window
//! (x_t, ..., x_{t+b-1}) is not all zero. Routes implemented here:
//!
//!  * `w_b_direct`: slide every window and test it, straight from the
//!    definition.
//!  * `RunDistribution::weight`: count maximal cyclic zero runs by length
//!    and subtract the windows hiding inside them.
//!  * `b_support`: materialize the set of contributing positions.
//!  * `w_b_via_span`: average Hamming weights over the row space of the
//!    shift matrix.
//!
//! They must agree; the test suites hold them to that.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

pub fn hamming_weight(word: &[u8]) -> usize {
    word.iter().filter(|&&c| c != 0).count()
}

fn check_window(b: usize, n: usize) -> Result<()> {
    if b == 0 || b > n {
        return Err(Error::WindowRange { b, n });
    }
    Ok(())
}

/// The cyclic b-window of the word starting at position t.
pub fn window(word: &[u8], t: usize, b: usize) -> Vec<u8> {
    let n = word.len();
    (0..b).map(|j| word[(t + j) % n]).collect()
}

/// Multiset of maximal cyclic zero-run lengths. The all-zero word counts
/// as one run of length n, the only case a run can wrap the whole cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDistribution {
    n: usize,
    /// psi[i] = number of maximal zero runs of length exactly i.
    psi: Vec<u64>,
}

impl RunDistribution {
    pub fn new(word: &[u8]) -> RunDistribution {
        let positions: Vec<usize> = (0..word.len()).filter(|&i| word[i] != 0).collect();
        RunDistribution::from_positions(word.len(), &positions)
    }

    /// Build from the sorted nonzero positions directly.
    pub fn from_positions(n: usize, positions: &[usize]) -> RunDistribution {
        assert!(n >= 1);
        let mut psi = vec![0u64; n + 1];
        if positions.is_empty() {
            psi[n] = 1;
            return RunDistribution { n, psi };
        }
        // Zeros between consecutive nonzero positions, cyclically.
        for w in positions.windows(2) {
            let gap = w[1] - w[0] - 1;
            if gap > 0 {
                psi[gap] += 1;
            }
        }
        let wrap = n - 1 - positions[positions.len() - 1] + positions[0];
        if wrap > 0 {
            psi[wrap] += 1;
        }
        RunDistribution { n, psi }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero_word(&self) -> bool {
        self.psi[self.n] == 1
    }

    /// Number of maximal zero runs of length exactly i.
    pub fn psi(&self, i: usize) -> u64 {
        self.psi.get(i).copied().unwrap_or(0)
    }

    /// Longest zero run, 0 when the word has full weight.
    pub fn max_run(&self) -> usize {
        (0..=self.n).rev().find(|&i| self.psi[i] > 0).unwrap_or(0)
    }

    /// w_b from the run lengths: a run of length i hides i - b + 1 zero
    /// windows when i >= b.
    pub fn weight(&self, b: usize) -> Result<usize> {
        check_window(b, self.n)?;
        if self.is_zero_word() {
            return Ok(0);
        }
        let hidden: u64 = (b..self.n)
            .map(|i| (i - b + 1) as u64 * self.psi[i])
            .sum();
        Ok(self.n - hidden as usize)
    }

    /// All of w_1, ..., w_n in one pass over the run lengths.
    pub fn weights(&self) -> Vec<usize> {
        if self.is_zero_word() {
            return vec![0; self.n];
        }
        // Suffix sums: s = sum psi[i], t = sum i*psi[i] over i >= b.
        let mut out = vec![0usize; self.n];
        let mut s: u64 = 0;
        let mut t: u64 = 0;
        for b in (1..=self.n).rev() {
            if b < self.n {
                s += self.psi[b];
                t += b as u64 * self.psi[b];
            }
            let hidden = t - (b as u64 - 1) * s;
            out[b - 1] = self.n - hidden as usize;
        }
        out
    }
}

/// Longest maximal cyclic zero run; n for the all-zero word.
pub fn max_zero_run(word: &[u8]) -> usize {
    RunDistribution::new(word).max_run()
}

/// w_b straight from the definition: count windows that are not all zero.
pub fn w_b_direct(word: &[u8], b: usize) -> Result<usize> {
    let n = word.len();
    check_window(b, n)?;
    let nonzero = (0..n)
        .filter(|&t| (0..b).any(|j| word[(t + j) % n] != 0))
        .count();
    Ok(nonzero)
}

/// Positions whose b-window sees a nonzero symbol: all (s - j) mod n for s
/// a nonzero position and 0 <= j < b. Sorted, deduplicated; its size is w_b.
pub fn b_support(word: &[u8], b: usize) -> Result<Vec<usize>> {
    let n = word.len();
    check_window(b, n)?;
    let mut support: Vec<usize> = (0..n)
        .filter(|&s| word[s] != 0)
        .flat_map(|s| (0..b).map(move |j| (s + n - j) % n))
        .collect();
    support.sort_unstable();
    support.dedup();
    Ok(support)
}

/// The b x n matrix whose rows are the cyclic left shifts of the word by
/// 0, 1, ..., b-1 positions.
pub fn shift_matrix(word: &[u8], b: usize) -> Vec<Vec<u8>> {
    let n = word.len();
    (0..b)
        .map(|j| (0..n).map(|i| word[(i + j) % n]).collect())
        .collect()
}

pub fn shift_rank(field: &Field, word: &[u8], b: usize) -> Result<usize> {
    check_window(b, word.len())?;
    Ok(crate::linalg::rank(field, &shift_matrix(word, b)))
}

/// Shift span saturation point: the least j at which the j-th cyclic shift
/// falls inside the span of the earlier ones. The rank of the b-row shift
/// matrix is min(b, rho). Zero word: 0.
pub fn word_rho(field: &Arc<Field>, word: &[u8]) -> usize {
    let n = word.len();
    let mut elim = crate::linalg::Eliminator::new(field.clone(), n);
    let mut shifted = word.to_vec();
    for j in 0..=n {
        if !elim.insert(&shifted) {
            return j;
        }
        shifted.rotate_left(1);
    }
    unreachable!("n + 1 vectors of length n cannot stay independent")
}

/// w_b via the row space of the shift matrix: over all q^b coefficient
/// tuples u, the Hamming weights of u * G_b sum to w_b * q^(b-1) * (q-1).
/// Enumerating the tuples costs q^b words, bounded by `max_words`.
pub fn w_b_via_span(
    field: &Arc<Field>,
    word: &[u8],
    b: usize,
    max_words: u128,
) -> Result<usize> {
    let n = word.len();
    check_window(b, n)?;
    let q = field.q() as u128;
    let needed = q.checked_pow(b as u32).unwrap_or(u128::MAX);
    if needed > max_words {
        return Err(Error::Budget {
            what: format!("span of {b} shifts over GF({})", field.q()),
            needed,
            cap: max_words,
        });
    }
    let rows = shift_matrix(word, b);
    let q = field.q();
    let mut digits = vec![0u8; b];
    let mut acc = vec![0u8; n];
    let mut total: u128 = 0;
    loop {
        total += hamming_weight(&acc) as u128;
        // Odometer step; keep acc = sum digits[d] * rows[d] incrementally.
        let mut d = 0;
        loop {
            if d == b {
                let denom = (q as u128).pow(b as u32 - 1) * (q as u128 - 1);
                debug_assert_eq!(total % denom, 0, "span weight sum must divide evenly");
                return Ok((total / denom) as usize);
            }
            let old = digits[d];
            let new = if old as u64 + 1 == q as u64 { 0 } else { old + 1 };
            digits[d] = new;
            let delta = field.sub(new, old);
            for (a, &r) in acc.iter_mut().zip(&rows[d]) {
                *a = field.add(*a, field.mul(delta, r));
            }
            if new != 0 {
                break;
            }
            d += 1;
        }
    }
}
