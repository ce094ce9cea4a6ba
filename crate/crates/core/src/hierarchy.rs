//! Code-level weight hierarchies.
//!
//! The b-symbol side comes from one pass over all codewords: each word's
//! zero-run profile yields w_b for every b at once. The generalized
//! Hamming side is computed by two independent algorithms, one sweeping
//! r-dimensional subcodes and one sweeping (k-r)-dimensional subspaces of
//! the message space; they must agree.

use serde::{Deserialize, Serialize};

use crate::code::{CyclicCode, LinearCode};
use crate::error::{Budget, Error, Result};
use crate::linalg::Eliminator;
use crate::metrics;
use crate::subspace::{for_each_combination, gaussian_binomial};

/// A weight hierarchy: d_1..d_n for kind "bsymbol", or the r-th
/// generalized Hamming weights for r = 1..k for kind "ghw". theta is the
/// code's maximum zero-run length over nonzero codewords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hierarchy {
    pub kind: String,
    pub n: usize,
    pub k: usize,
    pub theta: usize,
    pub values: Vec<usize>,
}

impl Hierarchy {
    /// Check the proven shape for this kind. For "bsymbol":
    /// 0 < d_1 < ... < d_theta < d_(theta+1) = ... = d_n = n. For "ghw":
    /// strictly increasing, ending within 1..=n. Returns a description of
    /// the first violation.
    pub fn shape_violation(&self) -> Option<String> {
        match self.kind.as_str() {
            "bsymbol" => {
                if self.values.len() != self.n {
                    return Some("expected one value per b in 1..=n".into());
                }
                if self.values[0] == 0 {
                    return Some("d_1 = 0".into());
                }
                for b in 1..=self.theta.min(self.n - 1) {
                    if self.values[b - 1] >= self.values[b] {
                        return Some(format!(
                            "d_{} = {} not below d_{} = {}",
                            b,
                            self.values[b - 1],
                            b + 1,
                            self.values[b]
                        ));
                    }
                }
                for b in self.theta + 1..=self.n {
                    if self.values[b - 1] != self.n {
                        return Some(format!(
                            "d_{} = {} but every b > theta = {} must reach n = {}",
                            b,
                            self.values[b - 1],
                            self.theta,
                            self.n
                        ));
                    }
                }
                None
            }
            "ghw" => {
                if self.values.len() != self.k {
                    return Some("expected one value per r in 1..=k".into());
                }
                for r in 1..self.k {
                    if self.values[r - 1] >= self.values[r] {
                        return Some(format!(
                            "weight at r = {} is {} but {} follows",
                            r,
                            self.values[r - 1],
                            self.values[r]
                        ));
                    }
                }
                if self.values[0] == 0 || self.values[self.k - 1] > self.n {
                    return Some("values leave the range 1..=n".into());
                }
                None
            }
            other => Some(format!("unknown hierarchy kind {other:?}")),
        }
    }
}

/// Everything a single enumeration pass over the codewords can tell:
/// the full b-symbol minimum vector, the weight sums feeding the window
/// identities, the maximum zero-run length, and one achieving message
/// per b.
#[derive(Clone, Debug)]
pub struct CodeProfile {
    pub n: usize,
    pub k: usize,
    pub q: u8,
    /// d_b for b = 1..=n: minimum w_b over nonzero codewords.
    pub d: Vec<usize>,
    /// Maximum zero-run length over nonzero codewords.
    pub theta: usize,
    /// Sum of w_b over all codewords (the zero word adds nothing).
    pub weight_sums: Vec<u128>,
    /// Message digits of one codeword attaining d_b, per b.
    pub achievers: Vec<Vec<u8>>,
    /// Codewords enumerated: q^k.
    pub codewords: u128,
}

/// Mergeable partial profile over a message-code range. Entries of `d`
/// left at usize::MAX mean the range held no nonzero codeword; the
/// achiever is kept as a message code so that merges can break ties
/// toward the lowest one, matching sequential enumeration order.
#[derive(Clone, Debug)]
pub struct RangeProfile {
    pub n: usize,
    pub d: Vec<usize>,
    pub achiever_code: Vec<u128>,
    pub theta: usize,
    pub weight_sums: Vec<u128>,
}

impl RangeProfile {
    pub fn empty(n: usize) -> RangeProfile {
        RangeProfile {
            n,
            d: vec![usize::MAX; n],
            achiever_code: vec![u128::MAX; n],
            theta: 0,
            weight_sums: vec![0; n],
        }
    }

    /// Pointwise merge; commutative and associative, so any reduction
    /// tree over a partition of the message space yields the same result.
    pub fn merge(mut self, other: RangeProfile) -> RangeProfile {
        assert_eq!(self.n, other.n);
        for b in 0..self.n {
            let mine = (self.d[b], self.achiever_code[b]);
            let theirs = (other.d[b], other.achiever_code[b]);
            if theirs < mine {
                self.d[b] = other.d[b];
                self.achiever_code[b] = other.achiever_code[b];
            }
            self.weight_sums[b] += other.weight_sums[b];
        }
        self.theta = self.theta.max(other.theta);
        self
    }
}

/// Profile the codewords whose message codes lie in [start, end).
pub fn profile_range(code: &LinearCode, start: u128, end: u128) -> RangeProfile {
    let n = code.n();
    let mut out = RangeProfile::empty(n);
    let mut positions: Vec<usize> = Vec::with_capacity(n);
    // runs[g] = number of maximal zero runs of length g in the current
    // word; `touched` lists the nonzero entries for cheap clearing.
    let mut runs = vec![0u32; n + 1];
    let mut touched: Vec<usize> = Vec::with_capacity(n);
    let mut msg_code = start;

    code.for_each_codeword_in(start, end, |_, word| {
        let this_code = msg_code;
        msg_code += 1;
        positions.clear();
        for (i, &c) in word.iter().enumerate() {
            if c != 0 {
                positions.push(i);
            }
        }
        if positions.is_empty() {
            return;
        }
        touched.clear();
        let mut bump = |g: usize| {
            if g > 0 {
                if runs[g] == 0 {
                    touched.push(g);
                }
                runs[g] += 1;
            }
        };
        for w in positions.windows(2) {
            bump(w[1] - w[0] - 1);
        }
        bump(n - 1 - positions[positions.len() - 1] + positions[0]);
        out.theta = out.theta.max(touched.iter().copied().max().unwrap_or(0));

        // w_b = n - sum_(g >= b) (g - b + 1) runs[g], all b in one sweep.
        let mut s = 0u64;
        let mut t = 0u64;
        for b in (1..=n).rev() {
            if b < n {
                s += runs[b] as u64;
                t += (b as u64) * runs[b] as u64;
            }
            let w = n - (t - (b as u64 - 1) * s) as usize;
            out.weight_sums[b - 1] += w as u128;
            if w < out.d[b - 1] {
                out.d[b - 1] = w;
                out.achiever_code[b - 1] = this_code;
            }
        }
        for &g in &touched {
            runs[g] = 0;
        }
    });
    out
}

/// Turn a fully merged range profile into a `CodeProfile`, decoding the
/// achieving message codes back into digit vectors.
pub fn finalize_profile(
    code: &LinearCode,
    merged: RangeProfile,
    codewords: u128,
) -> CodeProfile {
    let n = code.n();
    let k = code.k();
    let q = code.field().q() as u128;
    assert!(
        merged.d.iter().all(|&v| v <= n),
        "a nonzero codeword exists in every complete profile"
    );
    let achievers = merged
        .achiever_code
        .iter()
        .map(|&ac| {
            let mut digits = vec![0u8; k];
            let mut c = ac;
            for slot in digits.iter_mut() {
                *slot = (c % q) as u8;
                c /= q;
            }
            digits
        })
        .collect();
    CodeProfile {
        n,
        k,
        q: code.field().q(),
        d: merged.d,
        theta: merged.theta,
        weight_sums: merged.weight_sums,
        achievers,
        codewords,
    }
}

pub fn profile_code(code: &LinearCode, budget: &Budget) -> Result<CodeProfile> {
    let n = code.n();
    let k = code.k();
    let count = code.codeword_count().unwrap_or(u128::MAX);
    if count > budget.max_codewords {
        return Err(Error::Budget {
            what: format!("codeword enumeration of a [{n},{k}] code"),
            needed: count,
            cap: budget.max_codewords,
        });
    }
    Ok(finalize_profile(code, profile_range(code, 0, count), count))
}

/// Hierarchy of d_b for b = 1..=n. The computed sequence is validated
/// against the proven monotone-then-constant shape; a violation would mean
/// a defect in this crate, so it surfaces as an error.
pub fn b_symbol_hierarchy(code: &LinearCode, budget: &Budget) -> Result<Hierarchy> {
    let profile = profile_code(code, budget)?;
    let h = b_symbol_hierarchy_from(&profile);
    if let Some(v) = h.shape_violation() {
        return Err(Error::Invalid(format!(
            "computed b-symbol hierarchy violates its proven shape: {v}"
        )));
    }
    Ok(h)
}

/// Package an already-computed profile, without shape validation. The
/// harness path uses this so that violations become structured findings.
pub fn b_symbol_hierarchy_from(profile: &CodeProfile) -> Hierarchy {
    Hierarchy {
        kind: "bsymbol".into(),
        n: profile.n,
        k: profile.k,
        theta: profile.theta,
        values: profile.d.clone(),
    }
}

pub fn min_b_symbol_distance(code: &LinearCode, b: usize, budget: &Budget) -> Result<usize> {
    if b == 0 || b > code.n() {
        return Err(Error::WindowRange { b, n: code.n() });
    }
    Ok(profile_code(code, budget)?.d[b - 1])
}

/// Cyclic-only speedup: w_b is invariant under cyclic shifts, and shifting
/// a codeword corresponds to multiplying its message polynomial by x
/// modulo the check polynomial. Minimizing over one representative per
/// shift orbit therefore agrees with the full minimum.
pub fn min_b_symbol_distance_orbit(
    code: &CyclicCode,
    b: usize,
    budget: &Budget,
) -> Result<usize> {
    let n = code.n();
    let k = code.k();
    if b == 0 || b > n {
        return Err(Error::WindowRange { b, n });
    }
    let q = code.field().q() as u64;
    let count = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > budget.max_codewords {
        return Err(Error::Budget {
            what: format!("orbit enumeration of a [{n},{k}] code"),
            needed: count,
            cap: budget.max_codewords,
        });
    }
    let count = count as u64;
    let field = code.field().clone();
    let h = code.check_poly();
    // h is monic of degree k; reduction needs its lower coefficients.
    let hc: Vec<u8> = (0..k).map(|i| h.coeff(i)).collect();
    let qpows: Vec<u64> = (0..k).map(|i| q.pow(i as u32)).collect();

    let mut visited = vec![false; count as usize];
    visited[0] = true;
    let mut best = n;
    let mut digits = vec![0u8; k];
    let mut orbit = vec![0u8; k];
    for start in 1..count {
        if visited[start as usize] {
            continue;
        }
        let mut c = start;
        for slot in digits.iter_mut() {
            *slot = (c % q) as u8;
            c /= q;
        }
        let word = code.linear().encode(&digits);
        best = best.min(metrics::w_b_direct(&word, b)?);
        // Walk the orbit: m -> x * m mod h.
        orbit.copy_from_slice(&digits);
        loop {
            let lead = orbit[k - 1];
            for i in (1..k).rev() {
                orbit[i] = orbit[i - 1];
            }
            orbit[0] = 0;
            if lead != 0 {
                for (o, &coef) in orbit.iter_mut().zip(&hc) {
                    *o = field.sub(*o, field.mul(lead, coef));
                }
            }
            let idx: u64 = orbit
                .iter()
                .zip(&qpows)
                .map(|(&d, &p)| d as u64 * p)
                .sum();
            if idx == start {
                break;
            }
            visited[idx as usize] = true;
        }
    }
    Ok(best)
}

fn check_rank(r: usize, k: usize) -> Result<()> {
    if r == 0 || r > k {
        return Err(Error::RankRange { r, k });
    }
    Ok(())
}

fn check_subspace_budget(k: usize, dim: usize, q: u64, cap: u128, what: &str) -> Result<u128> {
    let needed = gaussian_binomial(k, dim, q).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::Budget {
            what: format!("{what} over {dim}-dimensional subspaces of GF({q})^{k}"),
            needed,
            cap,
        });
    }
    Ok(needed)
}

/// Support masks of every codeword, indexed by message code. Needs n <= 64
/// and q^k within the codeword budget.
fn support_mask_table(code: &LinearCode, budget: &Budget) -> Result<Vec<u64>> {
    let n = code.n();
    if n > 64 {
        return Err(Error::Budget {
            what: "support masks for block length".into(),
            needed: n as u128,
            cap: 64,
        });
    }
    let count = code.codeword_count().unwrap_or(u128::MAX);
    if count > budget.max_codewords {
        return Err(Error::Budget {
            what: format!("mask table of a [{},{}] code", n, code.k()),
            needed: count,
            cap: budget.max_codewords,
        });
    }
    let q = code.field().q() as u128;
    let mut table = vec![0u64; count as usize];
    let mut index = 0usize;
    code.for_each_codeword(|msg, word| {
        let mut mask = 0u64;
        for (i, &c) in word.iter().enumerate() {
            if c != 0 {
                mask |= 1 << i;
            }
        }
        debug_assert_eq!(
            index as u128,
            msg.iter()
                .enumerate()
                .map(|(i, &d)| d as u128 * q.pow(i as u32))
                .sum::<u128>()
        );
        table[index] = mask;
        index += 1;
    });
    Ok(table)
}

/// r-th generalized Hamming weight by the subcode route: sweep every
/// r-dimensional subcode as a canonical RREF matrix of messages; the
/// subcode's support is the union of its basis rows' supports.
pub fn ghw_subcode(code: &LinearCode, r: usize, budget: &Budget) -> Result<usize> {
    ghw_subcode_impl(code, r, budget, false)
}

/// As `ghw_subcode`, additionally re-deriving each subcode's support size
/// from the averaged Hamming-weight sum over all its q^r members, which
/// must match exactly. Costs q^r extra work per subspace; the subspace
/// budget gates the product.
pub fn ghw_subcode_verified(code: &LinearCode, r: usize, budget: &Budget) -> Result<usize> {
    ghw_subcode_impl(code, r, budget, true)
}

fn ghw_subcode_impl(
    code: &LinearCode,
    r: usize,
    budget: &Budget,
    verify_average: bool,
) -> Result<usize> {
    let k = code.k();
    let n = code.n();
    check_rank(r, k)?;
    let q = code.field().q() as u64;
    let count = check_subspace_budget(k, r, q, budget.max_subspaces, "subcode sweep")?;
    if verify_average {
        let work = count.saturating_mul((q as u128).pow(r as u32));
        if work > budget.max_subspaces {
            return Err(Error::Budget {
                what: "averaged subcode verification".into(),
                needed: work,
                cap: budget.max_subspaces,
            });
        }
    }
    let masks = support_mask_table(code, budget)?;
    let field = code.field().clone();

    let mut best = n;
    for_each_combination(k, r, |pivots| {
        // Free cells of the RREF pattern, first cell fastest.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        // Row i as digits and as its message-table index.
        let mut rows = vec![vec![0u8; k]; r];
        let mut codes = vec![0u64; r];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
            codes[i] = q.pow(p as u32);
        }
        loop {
            let mut union = 0u64;
            for &c in &codes {
                union |= masks[c as usize];
            }
            let support = union.count_ones() as usize;
            if support < best {
                best = support;
            }
            if verify_average {
                let mut sum: u128 = 0;
                let mut combo = vec![0u8; r];
                let mut word_code = 0u64;
                loop {
                    sum += masks[word_code as usize].count_ones() as u128;
                    let mut d = 0;
                    loop {
                        if d == r {
                            break;
                        }
                        let old = combo[d];
                        let new = if old + 1 == field.q() { 0 } else { old + 1 };
                        combo[d] = new;
                        // The member's message is sum combo[i] * row_i;
                        // adjust its index by the changed multiple.
                        word_code = recompute_member(&field, &rows, &combo, q);
                        if new != 0 {
                            break;
                        }
                        d += 1;
                    }
                    if combo.iter().all(|&x| x == 0) {
                        break;
                    }
                }
                let denom = (q as u128).pow(r as u32 - 1) * (q as u128 - 1);
                assert_eq!(
                    sum,
                    support as u128 * denom,
                    "averaged support identity failed"
                );
            }
            // Advance the odometer; keep digits and indices in step.
            let mut advanced = false;
            for &(i, j) in &free {
                let old = rows[i][j];
                let new = if old + 1 == field.q() { 0 } else { old + 1 };
                rows[i][j] = new;
                codes[i] = codes[i] + new as u64 * q.pow(j as u32)
                    - old as u64 * q.pow(j as u32);
                if new != 0 {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    });
    Ok(best)
}

fn recompute_member(
    field: &crate::field::Field,
    rows: &[Vec<u8>],
    combo: &[u8],
    q: u64,
) -> u64 {
    let k = rows[0].len();
    let mut digits = vec![0u8; k];
    for (c, row) in combo.iter().zip(rows) {
        if *c == 0 {
            continue;
        }
        for (d, &v) in digits.iter_mut().zip(row) {
            *d = field.add(*d, field.mul(*c, v));
        }
    }
    digits
        .iter()
        .enumerate()
        .map(|(i, &d)| d as u64 * q.pow(i as u32))
        .sum()
}

/// r-th generalized Hamming weight by the column route: n minus the
/// largest number of generator columns (with multiplicity) lying in a
/// (k-r)-dimensional subspace of the message space.
///
/// Membership bookkeeping: a column s lies in the RREF-spanned U exactly
/// when the combination forced by its pivot coordinates reproduces it, so
/// per subspace only one forced combination per distinct pivot projection
/// needs maintaining, and the odometer updates each incrementally.
pub fn ghw_column(code: &LinearCode, r: usize, budget: &Budget) -> Result<usize> {
    let k = code.k();
    let n = code.n();
    check_rank(r, k)?;
    let q = code.field().q() as u64;
    let l = k - r;
    check_subspace_budget(k, l, q, budget.max_subspaces, "column sweep")?;
    let field = code.field().clone();
    let qu = field.q();

    let cols: Vec<Vec<u8>> = (0..n).map(|j| code.column(j)).collect();

    let mut best_m = 0usize;
    for_each_combination(k, l, |pivots| {
        let nonpivot: Vec<usize> = (0..k).filter(|j| !pivots.contains(j)).collect();
        // Distinct (projection onto pivot coords, non-pivot code) pairs
        // with multiplicities; membership of a column depends only on its
        // pair.
        let mut pairs: Vec<(Vec<u8>, u64, usize)> = Vec::new();
        for col in &cols {
            let proj: Vec<u8> = pivots.iter().map(|&p| col[p]).collect();
            let code_np: u64 = nonpivot
                .iter()
                .map(|&j| col[j] as u64 * q.pow(j as u32))
                .sum();
            let idx = pairs
                .iter()
                .position(|(pr, cd, _)| *pr == proj && *cd == code_np)
                .unwrap_or_else(|| {
                    pairs.push((proj.clone(), code_np, 0));
                    pairs.len() - 1
                });
            pairs[idx].2 += 1;
        }
        let distinct_projs: Vec<Vec<u8>> = {
            let mut v: Vec<Vec<u8>> = Vec::new();
            for (pr, _, _) in &pairs {
                if !v.contains(pr) {
                    v.push(pr.clone());
                }
            }
            v
        };
        let proj_index: Vec<usize> = pairs
            .iter()
            .map(|(pr, _, _)| distinct_projs.iter().position(|x| x == pr).unwrap())
            .collect();

        // Free cells and the RREF basis rows of U.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut rows = vec![vec![0u8; k]; l];
        for (i, &p) in pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        // combo[t] = the forced combination sum proj_t[i] * row_i,
        // restricted to non-pivot coordinates as an integer code. A column
        // with pair (proj, c) lies in U iff combo[proj] = c.
        let mut combo_codes: Vec<u64> = vec![0; distinct_projs.len()];
        let mut combo_digits: Vec<Vec<u8>> = vec![vec![0u8; k]; distinct_projs.len()];

        loop {
            let mut m = 0usize;
            for ((_, cd, mult), &pi) in pairs.iter().zip(&proj_index) {
                if combo_codes[pi] == *cd {
                    m += mult;
                }
            }
            if m > best_m {
                best_m = m;
            }
            let mut advanced = false;
            for &(i, j) in &free {
                let old = rows[i][j];
                let new = if old + 1 == qu { 0 } else { old + 1 };
                rows[i][j] = new;
                let delta = field.sub(new, old);
                let pw = q.pow(j as u32);
                for (t, proj) in distinct_projs.iter().enumerate() {
                    let c = proj[i];
                    if c == 0 {
                        continue;
                    }
                    let add = field.mul(c, delta);
                    let oldd = combo_digits[t][j];
                    let newd = field.add(oldd, add);
                    combo_digits[t][j] = newd;
                    combo_codes[t] = combo_codes[t] + newd as u64 * pw - oldd as u64 * pw;
                }
                if new != 0 {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    });
    Ok(n - best_m)
}

/// Generalized weight hierarchy for r = 1..=k via the column route.
/// `theta` is recorded alongside; the caller supplies it (profile scan, or
/// k-1 for cyclic codes).
pub fn ghw_hierarchy(code: &LinearCode, theta: usize, budget: &Budget) -> Result<Hierarchy> {
    let values = (1..=code.k())
        .map(|r| ghw_column(code, r, budget))
        .collect::<Result<Vec<usize>>>()?;
    Ok(Hierarchy {
        kind: "ghw".into(),
        n: code.n(),
        k: code.k(),
        theta,
        values,
    })
}

/// Rank of the matrix of b cyclic shifts of the word: min(b, saturation).
pub fn codeword_rank(code: &LinearCode, word: &[u8], b: usize) -> usize {
    let mut elim = Eliminator::new(code.field().clone(), word.len());
    let mut shifted = word.to_vec();
    for j in 0..b {
        if !elim.insert(&shifted) {
            return j;
        }
        shifted.rotate_left(1);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CyclicCode;
    use crate::field::Field;
    use crate::poly::Poly;

    fn budget() -> Budget {
        Budget::default()
    }

    fn hamming() -> CyclicCode {
        CyclicCode::parse("q=2;n=7;g=1101").unwrap()
    }

    #[test]
    fn hamming_profile_and_hierarchies() {
        let code = hamming();
        let p = profile_code(code.linear(), &budget()).unwrap();
        assert_eq!(p.d[..4], [3, 5, 6, 7]);
        assert_eq!(p.theta, 3);
        assert_eq!(p.weight_sums[1], 84);
        let h = b_symbol_hierarchy(code.linear(), &budget()).unwrap();
        assert_eq!(h.values, vec![3, 5, 6, 7, 7, 7, 7]);
        assert_eq!(h.theta, 3);
        assert!(h.shape_violation().is_none());
        assert_eq!(ghw_subcode(code.linear(), 2, &budget()).unwrap(), 5);
        assert_eq!(ghw_column(code.linear(), 2, &budget()).unwrap(), 5);
        let ghw = ghw_hierarchy(code.linear(), p.theta, &budget()).unwrap();
        assert_eq!(ghw.values, vec![3, 5, 6, 7]);
    }

    #[test]
    fn simplex_hierarchies_agree() {
        let code = CyclicCode::simplex(2, 3).unwrap();
        let h = b_symbol_hierarchy(code.linear(), &budget()).unwrap();
        assert_eq!(h.values[..3], [4, 6, 7]);
        let ghw = ghw_hierarchy(code.linear(), h.theta, &budget()).unwrap();
        assert_eq!(ghw.values, vec![4, 6, 7]);
        assert!(ghw.shape_violation().is_none());
    }

    #[test]
    fn full_space_hierarchy_is_identity() {
        let f = Field::with_order(2).unwrap();
        let one = Poly::one(f.clone());
        let full = CyclicCode::from_generator(&one, 4).unwrap();
        let h = b_symbol_hierarchy(full.linear(), &budget()).unwrap();
        assert_eq!(h.values, vec![1, 2, 3, 4]);
        assert_eq!(h.theta, 3);
    }

    #[test]
    fn subcode_and_column_routes_agree_on_small_codes() {
        // (2, 6) brings repeated factors: x^6 - 1 = (x+1)^2 (x^2+x+1)^2.
        for (q, n) in [(2u64, 7usize), (3, 4), (2, 6)] {
            let f = Field::with_order(q).unwrap();
            for code in CyclicCode::enumerate(&f, n, true).unwrap() {
                for r in 1..=code.k() {
                    let a = ghw_subcode(code.linear(), r, &budget()).unwrap();
                    let b = ghw_column(code.linear(), r, &budget()).unwrap();
                    let v = ghw_subcode_verified(code.linear(), r, &budget()).unwrap();
                    assert_eq!(a, b, "{} r={r}", code.descriptor());
                    assert_eq!(a, v, "{} r={r} verified", code.descriptor());
                }
            }
        }
    }

    #[test]
    fn ghw_matches_brute_force_oracle() {
        // Oracle: for every r-subset of codeword-index combinations use
        // plain rank/support over all RREFs from the generic enumerator.
        use crate::subspace::for_each_rref;
        let code = hamming();
        let lin = code.linear();
        let f = lin.field().clone();
        for r in 1..=4usize {
            let mut best = usize::MAX;
            for_each_rref(&f, 4, r, |mat| {
                let mut support = [false; 7];
                for row in mat {
                    let word = lin.encode(row);
                    for (i, &c) in word.iter().enumerate() {
                        if c != 0 {
                            support[i] = true;
                        }
                    }
                }
                best = best.min(support.iter().filter(|&&s| s).count());
            });
            assert_eq!(ghw_subcode(lin, r, &budget()).unwrap(), best, "r = {r}");
        }
    }

    #[test]
    fn orbit_minimum_matches_full_enumeration() {
        // Third generator: (x + 1)(x^2 + x + 1)(x^4 + x + 1) dividing
        // x^15 - 1 over GF(2).
        for descriptor in ["q=2;n=7;g=1101", "q=3;n=4;g=201", "q=2;n=15;g=11010001"] {
            let code = CyclicCode::parse(descriptor).unwrap();
            for b in 1..=code.n().min(6) {
                let full = min_b_symbol_distance(code.linear(), b, &budget()).unwrap();
                let orbit = min_b_symbol_distance_orbit(&code, b, &budget()).unwrap();
                assert_eq!(full, orbit, "{descriptor} b={b}");
            }
        }
    }

    #[test]
    fn range_profiles_merge_to_the_sequential_profile() {
        let code = hamming();
        let lin = code.linear();
        let full = profile_code(lin, &budget()).unwrap();
        for split in [1u128, 5, 15] {
            let merged =
                profile_range(lin, 0, split).merge(profile_range(lin, split, 16));
            let rebuilt = finalize_profile(lin, merged, 16);
            assert_eq!(rebuilt.d, full.d);
            assert_eq!(rebuilt.theta, full.theta);
            assert_eq!(rebuilt.weight_sums, full.weight_sums);
            assert_eq!(rebuilt.achievers, full.achievers);
        }
        // Merge order must not matter.
        let merged = profile_range(lin, 8, 16).merge(profile_range(lin, 0, 8));
        assert_eq!(finalize_profile(lin, merged, 16).achievers, full.achievers);
    }

    #[test]
    fn budget_violations_are_reported() {
        let tight = Budget {
            max_codewords: 4,
            max_subspaces: 2,
        };
        let code = hamming();
        assert!(matches!(
            profile_code(code.linear(), &tight),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            ghw_subcode(code.linear(), 2, &tight),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            ghw_column(code.linear(), 2, &tight),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn rank_range_is_enforced() {
        let code = hamming();
        assert!(matches!(
            ghw_subcode(code.linear(), 0, &budget()),
            Err(Error::RankRange { .. })
        ));
        assert!(matches!(
            ghw_column(code.linear(), 5, &budget()),
            Err(Error::RankRange { .. })
        ));
    }

    #[test]
    fn codeword_rank_saturates() {
        let code = hamming();
        let word = vec![1, 0, 1, 0, 1, 0, 1];
        let sat = codeword_rank(code.linear(), &word, 7);
        assert!(sat <= 7);
        for b in 1..=7 {
            assert_eq!(codeword_rank(code.linear(), &word, b), b.min(sat));
        }
    }
}
