//! Bound and identity checkers over precomputed weight data.
//!
//! Everything here is pure integer arithmetic on values the caller already
//! computed (minimum distances, hierarchy entries, weight sums), so each
//! checker is independently testable and no checker can silently
//! recompute its own inputs. Verdicts are exact: all ceilings and floors
//! are integer divisions, never floating point.
//!
//! A hypothesis failure (the rank does not divide, the independence
//! assumption fails, a predecessor value does not exist) is reported as
//! `applicable: false` with the reason in the certificate, not as an
//! error; sweeps over parameter grids must not abort.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Outcome of a single bound check.
///
/// `holds` and `tight` are always derived from `lhs` and `rhs` at
/// construction. An inapplicable report carries lhs = rhs = 0, holds,
/// and the reason under `certificate.reason`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: String,
    pub params: Value,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub tight: bool,
    pub applicable: bool,
    pub certificate: Value,
}

enum Relation {
    Le,
    Ge,
    Eq,
}

fn report(
    bound_id: &str,
    params: Value,
    lhs: u128,
    rel: Relation,
    rhs: u128,
    certificate: Value,
) -> BoundReport {
    let holds = match rel {
        Relation::Le => lhs <= rhs,
        Relation::Ge => lhs >= rhs,
        Relation::Eq => lhs == rhs,
    };
    BoundReport {
        bound_id: bound_id.into(),
        params,
        lhs: lhs.try_into().unwrap_or(u64::MAX),
        rhs: rhs.try_into().unwrap_or(u64::MAX),
        holds,
        tight: lhs == rhs,
        applicable: true,
        certificate,
    }
}

fn inapplicable(bound_id: &str, params: Value, reason: &str) -> BoundReport {
    BoundReport {
        bound_id: bound_id.into(),
        params,
        lhs: 0,
        rhs: 0,
        holds: true,
        tight: false,
        applicable: false,
        certificate: json!({ "reason": reason }),
    }
}

/// Shared (q, n, k) triple the checkers need.
#[derive(Clone, Copy, Debug)]
pub struct CodeParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
}

impl CodeParams {
    fn with_b(&self, b: usize) -> Value {
        json!({ "q": self.q, "n": self.n, "k": self.k, "b": b })
    }

    fn with_r(&self, r: usize) -> Value {
        json!({ "q": self.q, "n": self.n, "k": self.k, "r": r })
    }
}

fn qpow(q: u64, e: usize) -> Option<u128> {
    (q as u128).checked_pow(u32::try_from(e).ok()?)
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a / b + u128::from(!a.is_multiple_of(b))
}

/// r-th generalized Hamming weight against n - k + r. Equality classifies
/// the code as r-rank maximum distance separable; cyclic codes always
/// land there at r = k.
pub fn generalized_singleton(p: CodeParams, r: usize, ghw_r: usize) -> BoundReport {
    let rhs = (p.n - p.k + r) as u128;
    let tight = ghw_r as u128 == rhs;
    report(
        "generalized_singleton",
        p.with_r(r),
        ghw_r as u128,
        Relation::Le,
        rhs,
        json!({ "r_rank_mds": tight }),
    )
}

/// b-symbol minimum distance against n - k + b. For a linear code of size
/// q^k this is the exponent form of: code size at most q^(n - d_b + b).
/// Equality classifies the code as b-symbol maximum distance separable.
pub fn bsymbol_singleton(p: CodeParams, b: usize, d_b: usize) -> BoundReport {
    let params = p.with_b(b);
    if d_b > p.n {
        return inapplicable("bsymbol_singleton", params, "d_b exceeds the length");
    }
    let rhs = (p.n - p.k + b) as u128;
    let tight = d_b as u128 == rhs;
    report(
        "bsymbol_singleton",
        params,
        d_b as u128,
        Relation::Le,
        rhs,
        json!({
            "bsymbol_mds": tight,
            "code_size_exponent_lhs": p.k,
            "code_size_exponent_rhs": p.n + b - d_b,
        }),
    )
}

/// When the code is maximum distance separable in the Hamming metric
/// (d_1 = n - k + 1), the b-symbol distance is pinned exactly: d_b = d_1
/// + b - 1 for every b up to the dimension.
pub fn mds_bsymbol_weights(p: CodeParams, b: usize, d_1: usize, d_b: usize) -> BoundReport {
    let params = p.with_b(b);
    if d_1 != p.n - p.k + 1 {
        return inapplicable(
            "mds_bsymbol_weights",
            params,
            "code is not maximum distance separable",
        );
    }
    if b > p.k {
        return inapplicable("mds_bsymbol_weights", params, "b exceeds the dimension");
    }
    report(
        "mds_bsymbol_weights",
        params,
        d_b as u128,
        Relation::Eq,
        (d_1 + b - 1) as u128,
        json!({ "predicted": d_1 + b - 1 }),
    )
}

/// Length bound from the r-th generalized Hamming weight:
/// n >= ghw_r + sum over i = 1..=(k-r) of ceil((q-1) ghw_r / (q^i (q^r - 1))).
pub fn generalized_griesmer_length(p: CodeParams, r: usize, ghw_r: usize) -> BoundReport {
    let params = p.with_r(r);
    let Some(qr) = qpow(p.q, r) else {
        return inapplicable(
            "generalized_griesmer_length",
            params,
            "parameters exceed exact integer range",
        );
    };
    let mut rhs = ghw_r as u128;
    let mut terms = Vec::new();
    for i in 1..=p.k - r {
        let Some(qi) = qpow(p.q, i) else {
            return inapplicable(
                "generalized_griesmer_length",
                params,
                "parameters exceed exact integer range",
            );
        };
        let Some(den) = qi.checked_mul(qr - 1) else {
            return inapplicable(
                "generalized_griesmer_length",
                params,
                "parameters exceed exact integer range",
            );
        };
        let term = ceil_div((p.q as u128 - 1) * ghw_r as u128, den);
        terms.push(term);
        rhs += term;
    }
    report(
        "generalized_griesmer_length",
        params,
        p.n as u128,
        Relation::Ge,
        rhs,
        json!({ "base": ghw_r, "terms": terms }),
    )
}

/// Ratio between consecutive generalized Hamming weights:
/// (q^r - 1) ghw_(r-1) <= (q^r - q) ghw_r, with ghw_0 = 0.
pub fn generalized_griesmer_ratio(
    p: CodeParams,
    r: usize,
    ghw_prev: usize,
    ghw_r: usize,
) -> BoundReport {
    let params = p.with_r(r);
    let Some(qr) = qpow(p.q, r) else {
        return inapplicable(
            "generalized_griesmer_ratio",
            params,
            "parameters exceed exact integer range",
        );
    };
    report(
        "generalized_griesmer_ratio",
        params,
        (qr - 1) * ghw_prev as u128,
        Relation::Le,
        (qr - p.q as u128) * ghw_r as u128,
        json!({}),
    )
}

/// Sum of b-symbol weights over all codewords of a cyclic code whose
/// b-consecutive coordinate windows are all linearly independent:
/// exactly n q^(k-b) (q^b - 1).
pub fn window_sum_identity(
    p: CodeParams,
    b: usize,
    independent: bool,
    observed_sum: u128,
) -> BoundReport {
    let params = p.with_b(b);
    if !independent {
        return inapplicable(
            "window_sum_identity",
            params,
            "some b consecutive positions are dependent",
        );
    }
    let (Some(qkb), Some(qb)) = (qpow(p.q, p.k - b), qpow(p.q, b)) else {
        return inapplicable(
            "window_sum_identity",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = p.n as u128 * qkb * (qb - 1);
    report(
        "window_sum_identity",
        params,
        observed_sum,
        Relation::Eq,
        rhs,
        json!({}),
    )
}

/// Upper bound from the window sum identity:
/// d_b <= floor((q^k - q^(k-b)) n / (q^k - 1)).
pub fn window_avg_upper(p: CodeParams, b: usize, independent: bool, d_b: usize) -> BoundReport {
    let params = p.with_b(b);
    if !independent {
        return inapplicable(
            "window_avg_upper",
            params,
            "some b consecutive positions are dependent",
        );
    }
    let (Some(qk), Some(qkb)) = (qpow(p.q, p.k), qpow(p.q, p.k - b)) else {
        return inapplicable(
            "window_avg_upper",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = (qk - qkb) * p.n as u128 / (qk - 1);
    report(
        "window_avg_upper",
        params,
        d_b as u128,
        Relation::Le,
        rhs,
        json!({}),
    )
}

/// Length bound from the window sum identity, valid for any k = tb + s:
/// n >= ceil(d_b (q^k - 1) / (q^(k-b) (q^b - 1))).
pub fn window_length_lower(
    p: CodeParams,
    b: usize,
    independent: bool,
    d_b: usize,
) -> BoundReport {
    let params = p.with_b(b);
    if !independent {
        return inapplicable(
            "window_length_lower",
            params,
            "some b consecutive positions are dependent",
        );
    }
    let (Some(qk), Some(qkb), Some(qb)) =
        (qpow(p.q, p.k), qpow(p.q, p.k - b), qpow(p.q, b))
    else {
        return inapplicable(
            "window_length_lower",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = ceil_div(d_b as u128 * (qk - 1), qkb * (qb - 1));
    report(
        "window_length_lower",
        params,
        p.n as u128,
        Relation::Ge,
        rhs,
        json!({ "t": p.k / b, "s": p.k % b }),
    )
}

/// The b | k case of `window_length_lower`: the closed form is the
/// ceiling of the geometric sum of d_b / (q^b)^i over i = 0..t-1.
pub fn window_length_lower_divisible(
    p: CodeParams,
    b: usize,
    independent: bool,
    d_b: usize,
) -> BoundReport {
    let params = p.with_b(b);
    if !p.k.is_multiple_of(b) {
        return inapplicable(
            "window_length_lower_divisible",
            params,
            "b does not divide the dimension",
        );
    }
    if !independent {
        return inapplicable(
            "window_length_lower_divisible",
            params,
            "some b consecutive positions are dependent",
        );
    }
    let t = p.k / b;
    let (Some(qk), Some(qkb), Some(qb)) =
        (qpow(p.q, p.k), qpow(p.q, p.k - b), qpow(p.q, b))
    else {
        return inapplicable(
            "window_length_lower_divisible",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = ceil_div(d_b as u128 * (qk - 1), qkb * (qb - 1));
    report(
        "window_length_lower_divisible",
        params,
        p.n as u128,
        Relation::Ge,
        rhs,
        json!({ "t": t }),
    )
}

/// Ratio between consecutive b-symbol distances of a cyclic code:
/// (q^b - q) d_b >= (q^b - 1) d_(b-1), with d_0 = 0.
pub fn successive_weight_ratio(
    p: CodeParams,
    b: usize,
    d_prev: usize,
    d_b: usize,
) -> BoundReport {
    let params = p.with_b(b);
    let Some(qb) = qpow(p.q, b) else {
        return inapplicable(
            "successive_weight_ratio",
            params,
            "parameters exceed exact integer range",
        );
    };
    report(
        "successive_weight_ratio",
        params,
        (qb - p.q as u128) * d_b as u128,
        Relation::Ge,
        (qb - 1) * d_prev as u128,
        json!({}),
    )
}

/// Ceiling form of the successive ratio:
/// d_b >= ceil((q^b - 1) d_(b-1) / (q^b - q)). Undefined at b = 1.
pub fn successive_weight_ceil(
    p: CodeParams,
    b: usize,
    d_prev: usize,
    d_b: usize,
) -> BoundReport {
    let params = p.with_b(b);
    if b == 1 {
        return inapplicable(
            "successive_weight_ceil",
            params,
            "no predecessor distance at b = 1",
        );
    }
    let Some(qb) = qpow(p.q, b) else {
        return inapplicable(
            "successive_weight_ceil",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = ceil_div((qb - 1) * d_prev as u128, qb - p.q as u128);
    report(
        "successive_weight_ceil",
        params,
        d_b as u128,
        Relation::Ge,
        rhs,
        json!({}),
    )
}

/// Single-ceiling geometric lower bound for cyclic codes:
/// d_b >= ceil(d_1 (q^b - 1) / (q^(b-1) (q - 1))), the closed form of
/// ceil(sum over i = 0..b-1 of d_1 / q^i).
pub fn geometric_sum_lower(p: CodeParams, b: usize, d_1: usize, d_b: usize) -> BoundReport {
    let params = p.with_b(b);
    let (Some(qb), Some(qb1)) = (qpow(p.q, b), qpow(p.q, b - 1)) else {
        return inapplicable(
            "geometric_sum_lower",
            params,
            "parameters exceed exact integer range",
        );
    };
    let rhs = ceil_div(d_1 as u128 * (qb - 1), qb1 * (p.q as u128 - 1));
    report(
        "geometric_sum_lower",
        params,
        d_b as u128,
        Relation::Ge,
        rhs,
        json!({}),
    )
}

/// Per-term ceiling lower bound for cyclic codes:
/// d_b >= sum over i = 0..b-1 of ceil(d_1 / q^i). Dominates the
/// single-ceiling geometric form on every instance; the certificate
/// records both values.
pub fn termwise_ceil_lower(p: CodeParams, b: usize, d_1: usize, d_b: usize) -> BoundReport {
    let params = p.with_b(b);
    let mut rhs: u128 = 0;
    let mut terms = Vec::new();
    for i in 0..b {
        let Some(qi) = qpow(p.q, i) else {
            return inapplicable(
                "termwise_ceil_lower",
                params,
                "parameters exceed exact integer range",
            );
        };
        let term = ceil_div(d_1 as u128, qi);
        terms.push(term);
        rhs += term;
    }
    let geometric = geometric_sum_lower(p, b, d_1, d_b);
    debug_assert!(!geometric.applicable || rhs >= geometric.rhs as u128);
    report(
        "termwise_ceil_lower",
        params,
        d_b as u128,
        Relation::Ge,
        rhs,
        json!({
            "terms": terms,
            "dominates_geometric_sum": true,
            "geometric_sum_bound": geometric.rhs,
        }),
    )
}

/// Conjectured length bound for cyclic codes when b divides k = tb:
/// n >= sum over i = 0..t-1 of ceil(d_b / (q^b)^i). Proven only at b = 1
/// and b = k; a failing report on any other instance is a counterexample,
/// so the certificate always carries everything needed to recheck it from
/// scratch.
pub fn conjectured_bsymbol_griesmer(
    p: CodeParams,
    b: usize,
    d_b: usize,
    descriptor: &str,
) -> BoundReport {
    let params = p.with_b(b);
    if b == 0 || !p.k.is_multiple_of(b) {
        return inapplicable(
            "conjectured_bsymbol_griesmer",
            params,
            "b does not divide the dimension",
        );
    }
    let t = p.k / b;
    let mut rhs: u128 = 0;
    let mut terms = Vec::new();
    for i in 0..t {
        let Some(qbi) = qpow(p.q, b * i) else {
            return inapplicable(
                "conjectured_bsymbol_griesmer",
                params,
                "parameters exceed exact integer range",
            );
        };
        let term = ceil_div(d_b as u128, qbi);
        terms.push(term);
        rhs += term;
    }
    report(
        "conjectured_bsymbol_griesmer",
        params,
        p.n as u128,
        Relation::Ge,
        rhs,
        json!({
            "conjectured": true,
            "descriptor": descriptor,
            "q": p.q,
            "n": p.n,
            "k": p.k,
            "b": b,
            "t": t,
            "d_b": d_b,
            "terms": terms,
        }),
    )
}

/// The four window-identity reports for one (code, b): the exact sum
/// identity, the averaged upper bound on d_b, and the two length lower
/// bounds. All gate on the independence hypothesis.
pub fn window_bound_bundle(
    p: CodeParams,
    b: usize,
    independent: bool,
    observed_sum: u128,
    d_b: usize,
) -> Vec<BoundReport> {
    vec![
        window_sum_identity(p, b, independent, observed_sum),
        window_avg_upper(p, b, independent, d_b),
        window_length_lower(p, b, independent, d_b),
        window_length_lower_divisible(p, b, independent, d_b),
    ]
}

/// The four lower-bound reports on d_b for one (code, b): the successive
/// ratio, its ceiling form, and the two Griesmer-style forms from d_1.
pub fn lower_bound_bundle(
    p: CodeParams,
    b: usize,
    d_prev: usize,
    d_1: usize,
    d_b: usize,
) -> Vec<BoundReport> {
    vec![
        successive_weight_ratio(p, b, d_prev, d_b),
        successive_weight_ceil(p, b, d_prev, d_b),
        geometric_sum_lower(p, b, d_1, d_b),
        termwise_ceil_lower(p, b, d_1, d_b),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    const HAMMING: CodeParams = CodeParams { q: 2, n: 7, k: 4 };
    const SIMPLEX: CodeParams = CodeParams { q: 2, n: 7, k: 3 };

    #[test]
    fn generalized_singleton_on_hamming_and_simplex() {
        let r1 = generalized_singleton(HAMMING, 1, 3);
        assert!(r1.holds && !r1.tight);
        assert_eq!((r1.lhs, r1.rhs), (3, 4));
        let r2 = generalized_singleton(SIMPLEX, 2, 6);
        assert!(r2.holds && r2.tight);
        assert_eq!(r2.certificate["r_rank_mds"], true);
        // r = k is forced tight for any code reaching n.
        let rk = generalized_singleton(HAMMING, 4, 7);
        assert!(rk.tight);
    }

    #[test]
    fn bsymbol_singleton_is_tight_on_hamming_b2() {
        let r = bsymbol_singleton(HAMMING, 2, 5);
        assert!(r.holds && r.tight && r.applicable);
        assert_eq!((r.lhs, r.rhs), (5, 5));
        assert_eq!(r.certificate["bsymbol_mds"], true);
        assert_eq!(r.certificate["code_size_exponent_lhs"], 4);
        // b = 1 is the classical Singleton bound, loose for Hamming.
        let loose = bsymbol_singleton(HAMMING, 1, 3);
        assert!(loose.holds && !loose.tight);
    }

    #[test]
    fn mds_weights_apply_only_to_mds_codes() {
        // A [4,2] code over GF(5) with d_1 = 3 is maximum distance
        // separable; the b = 2 distance is forced to 4.
        let p = CodeParams { q: 5, n: 4, k: 2 };
        let r = mds_bsymbol_weights(p, 2, 3, 4);
        assert!(r.applicable && r.holds && r.tight);
        let not = mds_bsymbol_weights(HAMMING, 2, 3, 5);
        assert!(!not.applicable && not.holds);
        assert!(not.certificate["reason"].as_str().unwrap().contains("not"));
    }

    #[test]
    fn griesmer_length_anchors() {
        // Simplex: 7 >= 4 + 2 + 1, tight.
        let r = generalized_griesmer_length(SIMPLEX, 1, 4);
        assert!(r.holds && r.tight);
        assert_eq!(r.rhs, 7);
        // Hamming at r = 1: 7 >= 3 + 2 + 1 + 1, tight as well.
        let h = generalized_griesmer_length(HAMMING, 1, 3);
        assert_eq!(h.rhs, 7);
        assert!(h.tight);
        // r = k leaves only the base term.
        let rk = generalized_griesmer_length(HAMMING, 4, 7);
        assert!(rk.tight);
        assert_eq!(rk.certificate["terms"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn griesmer_ratio_on_hamming_r2() {
        let r = generalized_griesmer_ratio(HAMMING, 2, 3, 5);
        assert!(r.holds && !r.tight);
        assert_eq!((r.lhs, r.rhs), (9, 10));
        // r = 1 with the zero convention for the predecessor.
        let r1 = generalized_griesmer_ratio(HAMMING, 1, 0, 3);
        assert!(r1.holds && r1.tight);
    }

    #[test]
    fn window_bundle_on_hamming_b2() {
        let reports = window_bound_bundle(HAMMING, 2, true, 84, 5);
        assert_eq!(reports.len(), 4);
        let sum = &reports[0];
        assert!(sum.holds && sum.applicable);
        assert_eq!((sum.lhs, sum.rhs), (84, 84));
        let upper = &reports[1];
        assert!(upper.holds && upper.tight);
        assert_eq!(upper.rhs, 5);
        let lower = &reports[2];
        assert!(lower.holds && lower.tight);
        assert_eq!(lower.rhs, 7);
        let divisible = &reports[3];
        assert!(divisible.applicable && divisible.tight);
        assert_eq!(divisible.certificate["t"], 2);
    }

    #[test]
    fn window_bundle_respects_hypothesis_gate() {
        for r in window_bound_bundle(HAMMING, 2, false, 84, 5) {
            assert!(!r.applicable);
            assert!(r.holds);
            assert_eq!((r.lhs, r.rhs), (0, 0));
        }
        // b not dividing k knocks out only the divisible form.
        let reports = window_bound_bundle(HAMMING, 3, true, 98, 6);
        assert!(reports[2].applicable);
        assert!(!reports[3].applicable);
    }

    #[test]
    fn lower_bounds_on_hamming_b2() {
        let reports = lower_bound_bundle(HAMMING, 2, 3, 3, 5);
        let ratio = &reports[0];
        assert_eq!((ratio.lhs, ratio.rhs), (10, 9));
        assert!(ratio.holds);
        let ceil = &reports[1];
        assert!(ceil.holds && ceil.tight);
        assert_eq!(ceil.rhs, 5);
        let geo = &reports[2];
        assert_eq!(geo.rhs, 5);
        let termwise = &reports[3];
        assert!(termwise.holds && termwise.tight);
        assert_eq!(termwise.rhs, 5);
        assert_eq!(termwise.certificate["geometric_sum_bound"], 5);
        assert_eq!(termwise.certificate["dominates_geometric_sum"], true);
    }

    #[test]
    fn lower_bounds_at_b1_degenerate() {
        let reports = lower_bound_bundle(HAMMING, 1, 0, 3, 3);
        assert!(reports[0].holds);
        assert!(!reports[1].applicable);
        // The termwise sum collapses to d_1 >= d_1.
        assert!(reports[3].tight);
    }

    #[test]
    fn conjecture_anchor_on_hamming() {
        let r = conjectured_bsymbol_griesmer(HAMMING, 2, 5, "q=2;n=7;g=1101");
        assert!(r.applicable && r.holds && r.tight);
        assert_eq!(r.rhs, 7);
        assert_eq!(r.certificate["conjectured"], true);
        assert_eq!(r.certificate["t"], 2);
        assert_eq!(
            r.certificate["terms"].as_array().unwrap().as_slice(),
            &[json!(5), json!(2)]
        );
        let nondiv = conjectured_bsymbol_griesmer(HAMMING, 3, 6, "q=2;n=7;g=1101");
        assert!(!nondiv.applicable);
    }

    #[test]
    fn conjecture_trivial_regimes() {
        // b = k: single term, n >= d_k = n.
        let r = conjectured_bsymbol_griesmer(HAMMING, 4, 7, "q=2;n=7;g=1101");
        assert!(r.holds && r.tight);
        // b = 1: classical length bound shape.
        let r1 = conjectured_bsymbol_griesmer(HAMMING, 1, 3, "q=2;n=7;g=1101");
        assert!(r1.holds);
        assert_eq!(r1.rhs, 3 + 2 + 1 + 1);
    }

    #[test]
    fn upper_bound_never_undercuts_lower_bound() {
        let upper = window_avg_upper(HAMMING, 2, true, 5);
        let lower = termwise_ceil_lower(HAMMING, 2, 3, 5);
        assert!(upper.rhs >= lower.rhs);
    }

    #[test]
    fn overflow_reports_inapplicable() {
        let huge = CodeParams { q: 16, n: 1000, k: 900 };
        let r = window_sum_identity(huge, 2, true, 0);
        assert!(!r.applicable);
        assert!(r.certificate["reason"]
            .as_str()
            .unwrap()
            .contains("integer range"));
    }

    #[test]
    fn reports_serialize_with_fixed_schema() {
        let r = bsymbol_singleton(HAMMING, 2, 5);
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "bound_id",
            "params",
            "lhs",
            "rhs",
            "holds",
            "tight",
            "applicable",
            "certificate",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["params"]["b"], 2);
    }
}
