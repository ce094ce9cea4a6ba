//! Batch sweeps over cyclic code families.
//!
//! Two run modes share one enumeration and record pipeline. The theorem
//! harness recomputes every proven identity and bound on every code in
//! its grid and treats any failure as an implementation defect: it halts
//! with a reproduction certificate. The conjecture search sweeps the
//! unproven length bound and treats a failure as a finding: it finishes
//! the sweep and reports the counterexample.
//!
//! Determinism contract: the same `SearchSpec` yields byte-identical
//! JSONL output at any parallelism degree. Codes are examined in
//! (n, q, divisor index) order, per-code work is order-independent, and
//! wall-clock timing never enters the serialized records.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{self, BoundReport, CodeParams};
use crate::code::{CyclicCode, LinearCode};
use crate::error::{Budget, Error, Result};
use crate::field::Field;
use crate::hierarchy::{
    self, b_symbol_hierarchy_from, finalize_profile, profile_code, profile_range,
    CodeProfile, Hierarchy, RangeProfile,
};
use crate::metrics::{self, RunDistribution};
use crate::subspace::gaussian_binomial;

/// Which b values a sweep examines per code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BPolicy {
    /// Every b from 1 to k.
    AllUpToK,
    /// Divisors b of k with 1 < b < k: the regime where the conjectured
    /// length bound is neither proven nor degenerate.
    ProperDivisors,
}

impl BPolicy {
    pub fn bs_for(self, k: usize) -> Vec<usize> {
        match self {
            BPolicy::AllUpToK => (1..=k).collect(),
            BPolicy::ProperDivisors => {
                (2..k).filter(|b| k.is_multiple_of(*b)).collect()
            }
        }
    }
}

/// Full description of a sweep. Identical specs produce byte-identical
/// output files.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub q: Vec<u64>,
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    pub b_policy: BPolicy,
    pub budget: Budget,
    pub jobs: usize,
    /// Seed for the sampled diagonal-and-shift invariance checks, the
    /// only randomized part of any sweep.
    pub sample_seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for SearchSpec {
    /// The default grid (q up to 4, block lengths up to 20) is a choice
    /// of this artifact: nothing published bounds where a counterexample
    /// would be most likely, so this is a desk-scale frontier, not a
    /// claim about the interesting region.
    fn default() -> SearchSpec {
        SearchSpec {
            q: vec![2, 3, 4],
            n_min: 2,
            n_max: 20,
            k_min: None,
            k_max: None,
            b_policy: BPolicy::ProperDivisors,
            budget: Budget::default(),
            jobs: 1,
            sample_seed: 0,
            out: None,
        }
    }
}

impl SearchSpec {
    pub fn validate(&self) -> Result<()> {
        if self.q.is_empty() {
            return Err(Error::Invalid("no field orders given".into()));
        }
        if self.n_min == 0 {
            return Err(Error::Invalid("block length must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Invalid("at least one worker required".into()));
        }
        if self.budget.max_codewords == 0 || self.budget.max_subspaces == 0 {
            return Err(Error::Invalid("budgets must be positive".into()));
        }
        for &q in &self.q {
            Field::with_order(q)?;
        }
        Ok(())
    }

    fn sorted_q(&self) -> Vec<u64> {
        let mut qs = self.q.clone();
        qs.sort_unstable();
        qs.dedup();
        qs
    }
}

/// A computation that was not performed, with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub what: String,
    pub reason: String,
}

/// One examined code: its hierarchies as far as budgets allowed, every
/// bound report, and explicit skips. Timing and the enumeration index
/// stay out of the serialized form so output bytes depend only on the
/// spec.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchRecord {
    pub descriptor: String,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub bsymbol: Option<Hierarchy>,
    pub ghw: Option<Hierarchy>,
    pub bounds: Vec<BoundReport>,
    pub skips: Vec<Skip>,
    #[serde(skip)]
    pub divisor_index: usize,
    #[serde(skip)]
    pub elapsed_micros: u128,
}

/// Reproduction certificate for a failed internal check.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub check_id: String,
    pub descriptor: String,
    pub context: Value,
}

/// Knobs for `check_code`. The harness turns everything on; the
/// conjecture search keeps only the structural checks.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub budget: Budget,
    /// Run the per-codeword identity suite (span identity, triangle
    /// inequality, rank floors). Costs a second enumeration pass.
    pub per_word: bool,
    /// Per-word span verification stops where q^b exceeds this; larger b
    /// are logged as skips.
    pub span_cap: u128,
    /// Number of sampled diagonal-and-shift transforms per code.
    pub dp_samples: usize,
    pub sample_seed: u64,
    /// Which b values receive a conjectured-bound report.
    pub conjecture_bs: BPolicy,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions {
            budget: Budget::default(),
            per_word: true,
            span_cap: 512,
            dp_samples: 3,
            sample_seed: 0,
            conjecture_bs: BPolicy::AllUpToK,
        }
    }
}

/// Everything `check_code` produced for one code.
#[derive(Clone, Debug, Default)]
pub struct CodeCheck {
    pub bounds: Vec<BoundReport>,
    pub counts: BTreeMap<String, u64>,
    pub violation: Option<Violation>,
    pub skips: Vec<Skip>,
}

fn add(counts: &mut BTreeMap<String, u64>, key: &str, by: u64) {
    *counts.entry(key.to_string()).or_insert(0) += by;
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Run every check and bound against one cyclic code, given its already
/// computed profile and (optionally) generalized hierarchy. Taking the
/// profile as an argument keeps this function honest: tests feed it a
/// corrupted profile and the suite must notice.
pub fn check_code(
    code: &CyclicCode,
    profile: &CodeProfile,
    ghw: Option<&Hierarchy>,
    opts: &CheckOptions,
) -> CodeCheck {
    let mut out = CodeCheck::default();
    let descriptor = code.descriptor();
    let n = code.n();
    let k = code.k();
    let q = code.field().q() as u64;
    let params = CodeParams { q, n, k };
    let fail = |check_id: &str, context: Value| Violation {
        check_id: check_id.into(),
        descriptor: descriptor.clone(),
        context,
    };

    // Hierarchy shape: positive, strictly increasing through theta, then
    // pinned at n.
    add(&mut out.counts, "hierarchy_shape", 1);
    let h = b_symbol_hierarchy_from(profile);
    if let Some(reason) = h.shape_violation() {
        out.violation = Some(fail(
            "hierarchy_shape",
            json!({ "reason": reason, "d": profile.d, "theta": profile.theta }),
        ));
        return out;
    }

    // Cyclic codes have maximum zero-run length exactly k - 1.
    add(&mut out.counts, "cyclic_theta", 1);
    if profile.theta != k - 1 {
        out.violation = Some(fail(
            "cyclic_theta",
            json!({ "theta": profile.theta, "k": k }),
        ));
        return out;
    }

    // Anchors: the two hierarchies agree at both ends.
    add(&mut out.counts, "hierarchy_anchors", 1);
    if profile.d[k - 1] != n {
        out.violation = Some(fail("hierarchy_anchors", json!({ "d_k": profile.d[k - 1] })));
        return out;
    }
    if let Some(g) = ghw {
        if g.values[0] != profile.d[0] || g.values[k - 1] != n {
            out.violation = Some(fail(
                "hierarchy_anchors",
                json!({ "ghw": g.values, "d_1": profile.d[0] }),
            ));
            return out;
        }
    }

    // Beyond the dimension every b-symbol distance saturates at n.
    for b in k..=n {
        add(&mut out.counts, "saturation_beyond_dimension", 1);
        if profile.d[b - 1] != n {
            out.violation = Some(fail(
                "saturation_beyond_dimension",
                json!({ "b": b, "d_b": profile.d[b - 1] }),
            ));
            return out;
        }
    }

    // The b-symbol distance dominates the generalized weight at equal
    // index.
    if let Some(g) = ghw {
        for b in 1..=k {
            add(&mut out.counts, "metric_dominance", 1);
            if profile.d[b - 1] < g.values[b - 1] {
                out.violation = Some(fail(
                    "metric_dominance",
                    json!({ "b": b, "d_b": profile.d[b - 1], "ghw_b": g.values[b - 1] }),
                ));
                return out;
            }
        }
    }

    // Bound suite. Applicable reports of proven bounds must hold; the
    // conjectured bound is collected, never enforced.
    let push_proven = |report: BoundReport, out: &mut CodeCheck| -> bool {
        add(&mut out.counts, &report.bound_id, 1);
        let ok = !report.applicable || report.holds;
        if !ok {
            out.violation = Some(Violation {
                check_id: report.bound_id.clone(),
                descriptor: descriptor.clone(),
                context: serde_json::to_value(&report).unwrap(),
            });
        }
        out.bounds.push(report);
        ok
    };

    if let Some(g) = ghw {
        for r in 1..=k {
            let ghw_r = g.values[r - 1];
            let ghw_prev = if r == 1 { 0 } else { g.values[r - 2] };
            for report in [
                bounds::generalized_singleton(params, r, ghw_r),
                bounds::generalized_griesmer_length(params, r, ghw_r),
                bounds::generalized_griesmer_ratio(params, r, ghw_prev, ghw_r),
            ] {
                if !push_proven(report, &mut out) {
                    return out;
                }
            }
        }
    }
    for b in 1..=k {
        let d_b = profile.d[b - 1];
        let d_prev = if b == 1 { 0 } else { profile.d[b - 2] };
        let independent = code.linear().windows_independent(b);
        let mut reports = vec![
            bounds::bsymbol_singleton(params, b, d_b),
            bounds::mds_bsymbol_weights(params, b, profile.d[0], d_b),
        ];
        reports.extend(bounds::window_bound_bundle(
            params,
            b,
            independent,
            profile.weight_sums[b - 1],
            d_b,
        ));
        reports.extend(bounds::lower_bound_bundle(params, b, d_prev, profile.d[0], d_b));
        for report in reports {
            if !push_proven(report, &mut out) {
                return out;
            }
        }
    }
    for b in opts.conjecture_bs.bs_for(k) {
        let report =
            bounds::conjectured_bsymbol_griesmer(params, b, profile.d[b - 1], &descriptor);
        add(&mut out.counts, &report.bound_id, 1);
        out.bounds.push(report);
    }

    // Sampled invariance: scaling coordinates by any nonzero diagonal and
    // cyclically shifting leaves the whole distance vector unchanged.
    if opts.dp_samples > 0 {
        let mut rng =
            ChaCha8Rng::seed_from_u64(opts.sample_seed ^ fnv1a(descriptor.as_bytes()));
        for _ in 0..opts.dp_samples {
            let diag: Vec<u8> = (0..n)
                .map(|_| rng.random_range(1..code.field().q()))
                .collect();
            let shift = rng.random_range(0..n);
            add(&mut out.counts, "scaled_shift_invariance", 1);
            let transformed = code
                .linear()
                .transformed_dp(&diag, shift)
                .expect("sampled diagonal has no zero entries");
            let tp = profile_range(&transformed, 0, profile.codewords);
            if tp.d != profile.d {
                out.violation = Some(fail(
                    "scaled_shift_invariance",
                    json!({ "diag": diag, "shift": shift, "expected": profile.d, "got": tp.d }),
                ));
                return out;
            }
        }
    }

    if opts.per_word {
        per_word_checks(code, profile, ghw, opts, &descriptor, &mut out);
    }
    out
}

/// Second enumeration pass: identities that hold per codeword.
fn per_word_checks(
    code: &CyclicCode,
    profile: &CodeProfile,
    ghw: Option<&Hierarchy>,
    opts: &CheckOptions,
    descriptor: &str,
    out: &mut CodeCheck,
) {
    let lin = code.linear();
    let field = lin.field();
    let n = code.n();
    let k = code.k();
    let q = code.field().q() as u128;

    // b values small enough for the per-word span verification.
    let mut span_bs: Vec<usize> = Vec::new();
    for b in 1..=n {
        if q.checked_pow(b as u32).is_some_and(|v| v <= opts.span_cap) {
            span_bs.push(b);
        } else {
            out.skips.push(Skip {
                what: format!("span identity at b = {b}"),
                reason: format!("q^b exceeds the per-word verification cap {}", opts.span_cap),
            });
        }
    }

    let mut span_checks = 0u64;
    let mut triangle_checks = 0u64;
    let mut subcode_floor_checks = 0u64;
    let mut achiever_rank_checks = 0u64;
    let mut violation: Option<Violation> = None;

    lin.for_each_codeword(|_, word| {
        if violation.is_some() {
            return;
        }
        let rd = RunDistribution::new(word);
        if rd.is_zero_word() {
            return;
        }
        let weights = rd.weights();

        for &b in &span_bs {
            span_checks += 1;
            let via = metrics::w_b_via_span(field, word, b, opts.span_cap)
                .expect("span budget was prechecked");
            if via != weights[b - 1] {
                violation = Some(Violation {
                    check_id: "span_identity".into(),
                    descriptor: descriptor.into(),
                    context: json!({ "word": word, "b": b, "runs": via, "span": weights[b - 1] }),
                });
                return;
            }
        }

        for b in 1..=n {
            for m in b..=(n - b) {
                let (wb, wm) = (weights[b - 1], weights[m - 1]);
                if wb == 0 || wm == 0 || wb > n - m || wm > n - b {
                    continue;
                }
                triangle_checks += 1;
                if weights[b + m - 1] > wb + wm {
                    violation = Some(Violation {
                        check_id: "triangle".into(),
                        descriptor: descriptor.into(),
                        context: json!({ "word": word, "b": b, "m": m, "weights": weights }),
                    });
                    return;
                }
            }
        }

        let rho_inf = metrics::word_rho(field, word);
        for b in 1..=k {
            let w_b = weights[b - 1];
            if let Some(g) = ghw {
                // The rows of the b-shift matrix span a subcode of rank
                // min(b, saturation); its support is at most w_b.
                let rho = b.min(rho_inf);
                subcode_floor_checks += 1;
                if w_b < g.values[rho - 1] {
                    violation = Some(Violation {
                        check_id: "rank_subcode_floor".into(),
                        descriptor: descriptor.into(),
                        context: json!({ "word": word, "b": b, "rho": rho, "w_b": w_b, "ghw_rho": g.values[rho - 1] }),
                    });
                    return;
                }
            }
            if profile.d[b - 1] < n && w_b == profile.d[b - 1] {
                achiever_rank_checks += 1;
                if rho_inf < b {
                    violation = Some(Violation {
                        check_id: "achiever_rank".into(),
                        descriptor: descriptor.into(),
                        context: json!({ "word": word, "b": b, "rank": rho_inf }),
                    });
                    return;
                }
            }
        }
    });

    add(&mut out.counts, "span_identity", span_checks);
    add(&mut out.counts, "triangle", triangle_checks);
    if ghw.is_some() {
        add(&mut out.counts, "rank_subcode_floor", subcode_floor_checks);
    }
    add(&mut out.counts, "achiever_rank", achiever_rank_checks);
    if out.violation.is_none() {
        out.violation = violation;
    }
}

/// Inner-parallel profile: a single large code is split into message
/// ranges merged order-independently, so the result is identical to the
/// sequential pass.
const INNER_PAR_THRESHOLD: u128 = 1 << 16;

fn profile_for(lin: &LinearCode, budget: &Budget, jobs: usize) -> Result<CodeProfile> {
    let count = lin.codeword_count().unwrap_or(u128::MAX);
    if count > budget.max_codewords {
        return Err(Error::Budget {
            what: format!("codeword enumeration of a [{},{}] code", lin.n(), lin.k()),
            needed: count,
            cap: budget.max_codewords,
        });
    }
    if jobs <= 1 || count < INNER_PAR_THRESHOLD {
        return profile_code(lin, budget);
    }
    let chunks = (jobs * 4).min(64) as u128;
    let step = count.div_ceil(chunks);
    let ranges: Vec<(u128, u128)> = (0..chunks)
        .map(|i| (i * step, ((i + 1) * step).min(count)))
        .filter(|(s, e)| s < e)
        .collect();
    let merged = ranges
        .into_par_iter()
        .map(|(s, e)| profile_range(lin, s, e))
        .reduce(|| RangeProfile::empty(lin.n()), RangeProfile::merge);
    Ok(finalize_profile(lin, merged, count))
}

fn budget_reason(err: &Error) -> String {
    match err {
        Error::Budget { what, needed, cap } => {
            format!("{what}: needs {needed}, cap {cap}")
        }
        other => other.to_string(),
    }
}

struct Examined {
    record: SearchRecord,
    counts: BTreeMap<String, u64>,
    violation: Option<Violation>,
}

fn examine_code(
    code: &CyclicCode,
    divisor_index: usize,
    spec: &SearchSpec,
    opts: &CheckOptions,
) -> Result<Examined> {
    let started = Instant::now();
    let lin = code.linear();
    let n = code.n();
    let k = code.k();
    let q = code.field().q() as u64;
    let mut skips = Vec::new();

    let profile = match profile_for(lin, &spec.budget, spec.jobs) {
        Ok(p) => Some(p),
        Err(e @ Error::Budget { .. }) => {
            skips.push(Skip {
                what: "b-symbol hierarchy".into(),
                reason: budget_reason(&e),
            });
            None
        }
        Err(e) => return Err(e),
    };

    let ghw_feasible = (1..=k).all(|r| {
        gaussian_binomial(k, k - r, q)
            .is_some_and(|g| g <= spec.budget.max_subspaces)
    });
    let ghw = if !ghw_feasible {
        skips.push(Skip {
            what: "generalized hierarchy".into(),
            reason: format!(
                "some rank needs more than {} subspaces",
                spec.budget.max_subspaces
            ),
        });
        None
    } else {
        let theta = profile.as_ref().map_or(k - 1, |p| p.theta);
        match hierarchy::ghw_hierarchy(lin, theta, &spec.budget) {
            Ok(h) => Some(h),
            Err(e @ Error::Budget { .. }) => {
                skips.push(Skip {
                    what: "generalized hierarchy".into(),
                    reason: budget_reason(&e),
                });
                None
            }
            Err(e) => return Err(e),
        }
    };

    let (bounds, counts, violation, mut check_skips) = match &profile {
        Some(p) => {
            let check = check_code(code, p, ghw.as_ref(), opts);
            (check.bounds, check.counts, check.violation, check.skips)
        }
        None => {
            // Without the distance vector no check can run; log every
            // conjecture pair this code would have contributed.
            let mut s = Vec::new();
            for b in opts.conjecture_bs.bs_for(k) {
                s.push(Skip {
                    what: format!("conjectured length bound at b = {b}"),
                    reason: "b-symbol hierarchy unavailable within budget".into(),
                });
            }
            (Vec::new(), BTreeMap::new(), None, s)
        }
    };
    skips.append(&mut check_skips);

    let record = SearchRecord {
        descriptor: code.descriptor(),
        q,
        n,
        k,
        bsymbol: profile.as_ref().map(b_symbol_hierarchy_from),
        ghw,
        bounds,
        skips,
        divisor_index,
        elapsed_micros: started.elapsed().as_micros(),
    };
    Ok(Examined {
        record,
        counts,
        violation,
    })
}

fn build_grid(spec: &SearchSpec) -> Result<Vec<(CyclicCode, usize)>> {
    let mut out = Vec::new();
    for n in spec.n_min..=spec.n_max {
        for &q in &spec.sorted_q() {
            let field = Field::with_order(q)?;
            for (idx, code) in CyclicCode::enumerate(&field, n, true)?
                .into_iter()
                .enumerate()
            {
                let k = code.k();
                if spec.k_min.is_some_and(|m| k < m) || spec.k_max.is_some_and(|m| k > m) {
                    continue;
                }
                out.push((code, idx));
            }
        }
    }
    Ok(out)
}

fn run_grid(spec: &SearchSpec, opts: &CheckOptions) -> Result<Vec<Examined>> {
    spec.validate()?;
    let grid = build_grid(spec)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("worker pool: {e}")))?;
    pool.install(|| {
        grid.par_iter()
            .map(|(code, idx)| examine_code(code, *idx, spec, opts))
            .collect()
    })
}

fn merge_counts(examined: &[Examined]) -> BTreeMap<String, u64> {
    let mut summary = BTreeMap::new();
    for e in examined {
        for (key, value) in &e.counts {
            *summary.entry(key.clone()).or_insert(0) += value;
        }
    }
    summary
}

fn first_violation(examined: &[Examined]) -> Option<Violation> {
    examined.iter().find_map(|e| e.violation.clone())
}

/// Outcome of a theorem-harness sweep. `violation`, when set, is the
/// first failure in deterministic grid order; the records still cover
/// the whole grid so the context around the failure is preserved.
#[derive(Debug)]
pub struct HarnessOutcome {
    pub records: Vec<SearchRecord>,
    pub summary: BTreeMap<String, u64>,
    pub violation: Option<Violation>,
}

/// Re-verify every proven identity and bound across the requested grid.
pub fn run_theorem_harness(spec: &SearchSpec) -> Result<HarnessOutcome> {
    let opts = CheckOptions {
        budget: spec.budget,
        per_word: true,
        span_cap: 512,
        dp_samples: 3,
        sample_seed: spec.sample_seed,
        conjecture_bs: spec.b_policy,
    };
    let examined = run_grid(spec, &opts)?;
    let summary = merge_counts(&examined);
    let violation = first_violation(&examined);
    let records = examined.into_iter().map(|e| e.record).collect();
    Ok(HarnessOutcome {
        records,
        summary,
        violation,
    })
}

/// Verdict of a conjecture sweep, with coverage accounting. A verdict is
/// only as good as its bookkeeping: `pairs_checked` counts applicable
/// (code, b) reports and `skips` counts everything that was not checked,
/// each skip carrying its reason in the records.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjectureVerdict {
    NoCounterexample {
        pairs_checked: u64,
        codes_examined: u64,
        skips: u64,
    },
    Counterexample {
        pairs_checked: u64,
        codes_examined: u64,
        skips: u64,
        certificate: Box<Value>,
    },
}

#[derive(Debug)]
pub struct ConjectureOutcome {
    pub records: Vec<SearchRecord>,
    pub summary: BTreeMap<String, u64>,
    /// A failed proven check: an engine defect, distinct from a
    /// counterexample.
    pub violation: Option<Violation>,
    pub verdict: ConjectureVerdict,
}

/// Sweep the conjectured length bound over the requested grid. A holds=false
/// report is the sought result, not an error: the sweep always completes
/// and the first counterexample (in grid order) becomes the verdict's
/// certificate.
pub fn run_conjecture_search(spec: &SearchSpec) -> Result<ConjectureOutcome> {
    let opts = CheckOptions {
        budget: spec.budget,
        per_word: false,
        span_cap: 512,
        dp_samples: 0,
        sample_seed: spec.sample_seed,
        conjecture_bs: spec.b_policy,
    };
    let examined = run_grid(spec, &opts)?;
    let summary = merge_counts(&examined);
    let violation = first_violation(&examined);
    let records: Vec<SearchRecord> = examined.into_iter().map(|e| e.record).collect();

    let mut pairs_checked = 0u64;
    let mut skips = 0u64;
    let mut certificate: Option<Value> = None;
    for record in &records {
        skips += record.skips.len() as u64;
        for report in &record.bounds {
            if report.bound_id != "conjectured_bsymbol_griesmer" || !report.applicable {
                continue;
            }
            pairs_checked += 1;
            if !report.holds && certificate.is_none() {
                certificate = Some(report.certificate.clone());
            }
        }
    }
    let codes_examined = records.len() as u64;
    let verdict = match certificate {
        Some(certificate) => ConjectureVerdict::Counterexample {
            pairs_checked,
            codes_examined,
            skips,
            certificate: Box::new(certificate),
        },
        None => ConjectureVerdict::NoCounterexample {
            pairs_checked,
            codes_examined,
            skips,
        },
    };
    Ok(ConjectureOutcome {
        records,
        summary,
        violation,
        verdict,
    })
}

/// Recheck a conjectured-bound report from nothing but its certificate:
/// rebuild the code from the descriptor, recompute the distance fresh,
/// redo the arithmetic, and compare every figure.
pub fn reverify_conjecture(report: &BoundReport) -> Result<bool> {
    if report.bound_id != "conjectured_bsymbol_griesmer" {
        return Err(Error::Invalid(format!(
            "not a conjectured-bound report: {}",
            report.bound_id
        )));
    }
    let cert = &report.certificate;
    let descriptor = cert["descriptor"]
        .as_str()
        .ok_or_else(|| Error::Invalid("certificate lacks a descriptor".into()))?;
    let b = cert["b"]
        .as_u64()
        .ok_or_else(|| Error::Invalid("certificate lacks b".into()))? as usize;
    let code = CyclicCode::parse(descriptor)?;
    let profile = profile_code(code.linear(), &Budget::default())?;
    if b == 0 || b > code.k() {
        return Err(Error::Invalid(format!("b = {b} out of range")));
    }
    let fresh = bounds::conjectured_bsymbol_griesmer(
        CodeParams {
            q: code.field().q() as u64,
            n: code.n(),
            k: code.k(),
        },
        b,
        profile.d[b - 1],
        descriptor,
    );
    Ok(fresh.applicable
        && fresh.holds == report.holds
        && fresh.lhs == report.lhs
        && fresh.rhs == report.rhs
        && cert["d_b"] == json!(profile.d[b - 1]))
}

/// Write records as JSON lines plus a sibling CSV summary next to it
/// (same stem, .csv extension). Returns the CSV path.
pub fn write_reports(records: &[SearchRecord], path: &Path) -> Result<PathBuf> {
    let io_err = |e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source: e,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    for record in records {
        serde_json::to_writer(&mut out, record)
            .map_err(|e| io_err(std::io::Error::other(e)))?;
        out.write_all(b"\n").map_err(io_err)?;
    }
    out.flush().map_err(io_err)?;

    let csv_path = path.with_extension("csv");
    let csv_err = |e: csv::Error| Error::Io {
        path: csv_path.display().to_string(),
        source: std::io::Error::other(e),
    };
    let mut w = csv::Writer::from_path(&csv_path).map_err(csv_err)?;
    w.write_record([
        "descriptor",
        "q",
        "n",
        "k",
        "theta",
        "d_values",
        "ghw_values",
        "conjecture",
    ])
    .map_err(csv_err)?;
    for record in records {
        let join = |values: &[usize]| {
            values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let d_values = record
            .bsymbol
            .as_ref()
            .map_or(String::new(), |h| join(&h.values[..record.k]));
        let ghw_values = record
            .ghw
            .as_ref()
            .map_or(String::new(), |h| join(&h.values));
        let theta = record
            .bsymbol
            .as_ref()
            .or(record.ghw.as_ref())
            .map_or(String::new(), |h| h.theta.to_string());
        let conjecture = record
            .bounds
            .iter()
            .filter(|r| r.bound_id == "conjectured_bsymbol_griesmer" && r.applicable)
            .map(|r| {
                format!(
                    "b={}:{}",
                    r.params["b"],
                    if r.holds { "holds" } else { "COUNTEREXAMPLE" }
                )
            })
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            record.descriptor.as_str(),
            &record.q.to_string(),
            &record.n.to_string(),
            &record.k.to_string(),
            &theta,
            &d_values,
            &ghw_values,
            &conjecture,
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(csv_path)
}
