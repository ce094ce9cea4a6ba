//! bsym: symbol-window weights, weight hierarchies, and bound sweeps for
//! codes over small finite fields.
//!
//! stdout carries data (JSON unless --format=table); everything else goes
//! to stderr. Exit status: 0 = success / no counterexample, 1 = operational
//! error or a failed internal check, 2 = conjecture counterexample found.

use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bsym_core::bounds::BoundReport;
use bsym_core::code::CyclicCode;
use bsym_core::explorer::{
    check_code, run_conjecture_search, run_theorem_harness, write_reports, BPolicy, CheckOptions,
    ConjectureVerdict, SearchRecord, SearchSpec, Violation,
};
use bsym_core::field::{format_elements, parse_elements};
use bsym_core::hierarchy::{b_symbol_hierarchy_from, profile_code, Hierarchy};
use bsym_core::metrics::{self, RunDistribution};
use bsym_core::{Budget, Error, Field};

const ABOUT: &str = "Weights, weight hierarchies, and bounds for cyclic codes";

const LONG_ABOUT: &str = "\
Computes symbol-window weights and weight hierarchies of linear and cyclic
codes over finite fields of order at most 16, reports the classical and
window bounds those hierarchies must satisfy, and sweeps whole families of
cyclic codes checking every bound (including one still-unproven length
bound, for which it hunts counterexamples).

Vocabulary used by the flags:

  b      window width. The b-symbol weight of a word counts the coordinates
         whose cyclic window of b consecutive symbols is nonzero; b = 1 is
         the Hamming weight. The b-symbol distance d_b of a code is the
         least b-symbol weight over its nonzero codewords.

  r      subcode rank. The r-th generalized Hamming weight of an [n,k] code
         is the smallest support size over its r-dimensional subcodes;
         r = 1 is the Hamming distance.

  delta  index divisor of the irreducible construction: the code has length
         n = (q^k - 1)/delta and is the trace image of a one-dimensional
         code over the degree-k extension field. delta = 1 gives the
         simplex code.

Words and polynomials are written as element codes ascending by degree:
a base-q digit string for q <= 10 (\"1101\" over GF(2) means 1 + x + x^3),
comma-separated codes for q > 10 (\"1,0,12\" over GF(13)). A cyclic code is
named by the descriptor q=<order>;n=<length>;g=<generator polynomial>,
e.g. q=2;n=7;g=1101.";

#[derive(Parser)]
#[command(name = "bsym", version, about = ABOUT, long_about = LONG_ABOUT)]
struct Cli {
    /// Output format for stdout: machine-readable JSON or aligned text.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the b-symbol weight of a single word.
    Weight(WeightArgs),
    /// Compute the b-symbol and generalized weight hierarchies of a code.
    Hierarchy(HierarchyArgs),
    /// Report every bound on a code's weight hierarchies, one JSON record
    /// per bound.
    Bounds(BoundsArgs),
    /// Build a named cyclic code family member and print its descriptor.
    Construct(ConstructArgs),
    /// Sweep cyclic codes for counterexamples to the conjectured length
    /// bound n >= sum of ceil(d_b / q^(b*i)); exit status 2 reports a find.
    Search(SweepArgs),
    /// Re-verify every proven identity and bound across a grid of cyclic
    /// codes; any failure is an engine defect and exits with status 1.
    Harness(SweepArgs),
}

#[derive(Args)]
struct WeightArgs {
    /// Field order q (a prime power, at most 16).
    #[arg(long)]
    q: u64,
    /// The word, as element codes ascending by coordinate.
    #[arg(long)]
    word: String,
    /// Window width b, between 1 and the word length. Each coordinate is
    /// read together with the b-1 symbols after it, wrapping cyclically;
    /// the weight counts windows that are not all zero.
    #[arg(long)]
    b: usize,
    /// Computation route. "direct" scans the n windows, "runs" evaluates
    /// the zero-run-length formula, "support" counts the coordinates some
    /// window covers, "span" averages Hamming weights over the span of the
    /// b cyclic shifts. "all" runs every route, insists they agree, and
    /// prints the single agreed value.
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Runs,
    Support,
    Span,
    All,
}

#[derive(Args)]
struct HierarchyArgs {
    /// Code descriptor, e.g. q=2;n=7;g=1101.
    #[arg(long)]
    code: String,
    /// Which hierarchy to compute: the b-symbol distances d_1..d_n, the
    /// generalized Hamming weights for ranks 1..k, or both.
    #[arg(long, value_enum, default_value_t = Metric::Both)]
    metric: Metric,
    /// Refuse codeword enumeration beyond this many words.
    #[arg(long, default_value_t = Budget::default().max_codewords)]
    max_codewords: u128,
    /// Refuse subspace enumeration beyond this many subspaces per rank.
    #[arg(long, default_value_t = Budget::default().max_subspaces)]
    max_subspaces: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Metric {
    Bsymbol,
    Ghw,
    Both,
}

#[derive(Args)]
struct BoundsArgs {
    /// Code descriptor, e.g. q=2;n=7;g=1101.
    #[arg(long)]
    code: String,
    /// Window widths to report on (repeatable, each between 1 and k).
    /// Defaults to every width when no --b and no --r is given.
    #[arg(long)]
    b: Vec<usize>,
    /// Subcode ranks to report on (repeatable, each between 1 and k).
    /// Defaults to every rank when no --b and no --r is given.
    #[arg(long)]
    r: Vec<usize>,
    #[arg(long, default_value_t = Budget::default().max_codewords)]
    max_codewords: u128,
    #[arg(long, default_value_t = Budget::default().max_subspaces)]
    max_subspaces: u128,
}

#[derive(Args)]
struct ConstructArgs {
    /// Family name.
    #[arg(long, value_enum)]
    family: Family,
    /// Field order q (a prime power, at most 16).
    #[arg(long)]
    q: u64,
    /// Dimension k of the code.
    #[arg(long)]
    k: usize,
    /// Index divisor for the irreducible family: n = (q^k - 1)/delta.
    /// Requires delta to divide q^k - 1 and the extension degree to stay
    /// k; rejected for the simplex family, whose delta is fixed at 1.
    #[arg(long)]
    delta: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Simplex,
    Irreducible,
}

#[derive(Args)]
struct SweepArgs {
    /// Field order to include (repeatable), a prime power at most 16.
    #[arg(long = "q", default_values_t = vec![2u64, 3, 4])]
    q: Vec<u64>,
    /// Smallest block length in the grid.
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    /// Largest block length in the grid.
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    /// Keep only codes of at least this dimension.
    #[arg(long)]
    k_min: Option<usize>,
    /// Keep only codes of at most this dimension.
    #[arg(long)]
    k_max: Option<usize>,
    /// Window widths examined for the conjectured length bound. "divisors"
    /// takes divisors b of k with 1 < b < k, the regime where the bound is
    /// neither proven nor forced; "all" takes every b up to k. Defaults to
    /// divisors for search and all for harness.
    #[arg(long, value_enum)]
    b_policy: Option<BPolicyArg>,
    /// Skip codes whose codeword count exceeds this, recording the skip.
    #[arg(long, default_value_t = Budget::default().max_codewords)]
    max_codewords: u128,
    /// Skip ranks whose subspace count exceeds this, recording the skip.
    #[arg(long, default_value_t = Budget::default().max_subspaces)]
    max_subspaces: u128,
    /// Worker threads. Output bytes are identical at any value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write records to this JSONL file plus a CSV summary beside it; with
    /// no --out, records stream to stdout before the summary line.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the sampled scaling-and-shift invariance checks, the only
    /// randomized step anywhere; every other result is seed-free.
    #[arg(long, default_value_t = 0)]
    sample_seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BPolicyArg {
    Divisors,
    All,
}

impl From<BPolicyArg> for BPolicy {
    fn from(arg: BPolicyArg) -> BPolicy {
        match arg {
            BPolicyArg::Divisors => BPolicy::ProperDivisors,
            BPolicyArg::All => BPolicy::AllUpToK,
        }
    }
}

impl SweepArgs {
    fn spec(&self, default_policy: BPolicy) -> SearchSpec {
        SearchSpec {
            q: self.q.clone(),
            n_min: self.n_min,
            n_max: self.n_max,
            k_min: self.k_min,
            k_max: self.k_max,
            b_policy: self.b_policy.map_or(default_policy, BPolicy::from),
            budget: Budget {
                max_codewords: self.max_codewords,
                max_subspaces: self.max_subspaces,
            },
            jobs: self.jobs,
            sample_seed: self.sample_seed,
            out: self.out.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_only = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if usage_only {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("bsym: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Weight(args) => cmd_weight(args, cli.format),
        Command::Hierarchy(args) => cmd_hierarchy(args, cli.format),
        Command::Bounds(args) => cmd_bounds(args, cli.format),
        Command::Construct(args) => cmd_construct(args, cli.format),
        Command::Search(args) => cmd_search(args, cli.format),
        Command::Harness(args) => cmd_harness(args, cli.format),
    }
}

fn print_json(value: &Value) {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value).expect("stdout");
    out.write_all(b"\n").expect("stdout");
}

/// Cap on q^b for the span route: it enumerates every length-b message
/// tuple, so a single word stays desk-scale under the codeword budget.
const SPAN_CAP: u128 = 1 << 24;

fn cmd_weight(args: &WeightArgs, format: Format) -> Result<u8, Error> {
    let field = Field::with_order(args.q)?;
    let word = parse_elements(&field, &args.word)?;
    if word.is_empty() {
        return Err(Error::Invalid("empty word".into()));
    }
    let b = args.b;
    let route = |method: Method| -> Result<usize, Error> {
        match method {
            Method::Direct => metrics::w_b_direct(&word, b),
            Method::Runs => RunDistribution::new(&word).weight(b),
            Method::Support => metrics::b_support(&word, b).map(|s| s.len()),
            Method::Span => metrics::w_b_via_span(&field, &word, b, SPAN_CAP),
            Method::All => unreachable!(),
        }
    };

    let mut body = json!({
        "q": args.q,
        "word": format_elements(&field, &word),
        "n": word.len(),
        "b": b,
    });
    let weight;
    match args.method {
        Method::All => {
            let direct = route(Method::Direct)?;
            let runs = route(Method::Runs)?;
            let support = route(Method::Support)?;
            let mut values = vec![("direct", direct), ("runs", runs), ("support", support)];
            let span_feasible = (args.q as u128)
                .checked_pow(b as u32)
                .is_some_and(|v| v <= SPAN_CAP);
            if span_feasible {
                values.push(("span", route(Method::Span)?));
            } else {
                body["span"] = json!("skipped: q^b exceeds the enumeration cap");
            }
            if values.iter().any(|&(_, v)| v != direct) {
                let detail: Vec<String> =
                    values.iter().map(|(m, v)| format!("{m}={v}")).collect();
                return Err(Error::Invalid(format!(
                    "weight routes disagree ({}); this is a bug",
                    detail.join(", ")
                )));
            }
            weight = direct;
            body["method"] = json!("all");
            body["routes_agree"] = json!(values.iter().map(|&(m, _)| m).collect::<Vec<_>>());
        }
        m => {
            weight = route(m)?;
            body["method"] = json!(match m {
                Method::Direct => "direct",
                Method::Runs => "runs",
                Method::Support => "support",
                Method::Span => "span",
                Method::All => unreachable!(),
            });
        }
    }
    body["weight"] = json!(weight);
    match format {
        Format::Json => print_json(&body),
        Format::Table => println!("w_{b} = {weight}"),
    }
    Ok(0)
}

fn load_code(descriptor: &str) -> Result<CyclicCode, Error> {
    CyclicCode::parse(descriptor)
}

fn hierarchy_annotations(
    code: &CyclicCode,
    bsymbol: Option<&Hierarchy>,
    ghw: Option<&Hierarchy>,
) -> Vec<String> {
    let (n, k) = (code.n(), code.k());
    let mut notes = Vec::new();
    if let Some(h) = bsymbol {
        notes.push(format!(
            "d_b = {n} = n for every b >= k = {k}: windows that wide force full weight"
        ));
        if let Some(g) = ghw {
            notes.push(format!(
                "d_1 = {} equals the first generalized weight (both are the Hamming distance)",
                h.values[0]
            ));
            notes.push(format!(
                "d_{k} and the rank-{k} generalized weight both equal n = {}",
                g.values[k - 1]
            ));
        }
    }
    notes
}

fn cmd_hierarchy(args: &HierarchyArgs, format: Format) -> Result<u8, Error> {
    let code = load_code(&args.code)?;
    let budget = Budget {
        max_codewords: args.max_codewords,
        max_subspaces: args.max_subspaces,
    };
    let lin = code.linear();
    let want_b = matches!(args.metric, Metric::Bsymbol | Metric::Both);
    let want_g = matches!(args.metric, Metric::Ghw | Metric::Both);

    let mut bsymbol = None;
    let mut theta = code.k() - 1;
    if want_b {
        let profile = profile_code(lin, &budget)?;
        theta = profile.theta;
        bsymbol = Some(b_symbol_hierarchy_from(&profile));
    }
    let ghw = if want_g {
        Some(bsym_core::hierarchy::ghw_hierarchy(lin, theta, &budget)?)
    } else {
        None
    };

    let notes = hierarchy_annotations(&code, bsymbol.as_ref(), ghw.as_ref());
    match format {
        Format::Json => print_json(&json!({
            "descriptor": code.descriptor(),
            "q": code.field().q(),
            "n": code.n(),
            "k": code.k(),
            "bsymbol": bsymbol,
            "ghw": ghw,
            "annotations": notes,
        })),
        Format::Table => {
            println!(
                "{}  [{},{}] over GF({})",
                code.descriptor(),
                code.n(),
                code.k(),
                code.field().q()
            );
            let join = |values: &[usize]| {
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            if let Some(h) = &bsymbol {
                println!(
                    "b-symbol   b=1..{}: {}   (theta = {})",
                    h.n,
                    join(&h.values),
                    h.theta
                );
            }
            if let Some(g) = &ghw {
                println!("ghw        r=1..{}: {}", g.k, join(&g.values));
            }
            for note in &notes {
                println!("note: {note}");
            }
        }
    }
    Ok(0)
}

fn report_param(report: &BoundReport, key: &str) -> Option<usize> {
    report.params.get(key)?.as_u64().map(|v| v as usize)
}

fn cmd_bounds(args: &BoundsArgs, format: Format) -> Result<u8, Error> {
    let code = load_code(&args.code)?;
    let budget = Budget {
        max_codewords: args.max_codewords,
        max_subspaces: args.max_subspaces,
    };
    let k = code.k();
    for &b in &args.b {
        if b == 0 || b > k {
            return Err(Error::WindowRange { b, n: k });
        }
    }
    for &r in &args.r {
        if r == 0 || r > k {
            return Err(Error::RankRange { r, k });
        }
    }

    let lin = code.linear();
    let profile = profile_code(lin, &budget)?;
    let ghw = bsym_core::hierarchy::ghw_hierarchy(lin, profile.theta, &budget)?;
    let opts = CheckOptions {
        budget,
        per_word: false,
        dp_samples: 0,
        conjecture_bs: BPolicy::AllUpToK,
        ..CheckOptions::default()
    };
    let check = check_code(&code, &profile, Some(&ghw), &opts);
    if let Some(v) = &check.violation {
        print_json(&serde_json::to_value(v).expect("violation serializes"));
        eprintln!(
            "bsym: internal check {} failed on {}; this is a bug",
            v.check_id, v.descriptor
        );
        return Ok(1);
    }

    let all = args.b.is_empty() && args.r.is_empty();
    let b_set: BTreeSet<usize> = args.b.iter().copied().collect();
    let r_set: BTreeSet<usize> = args.r.iter().copied().collect();
    let selected = check.bounds.iter().filter(|report| {
        if all {
            return true;
        }
        if let Some(b) = report_param(report, "b") {
            return b_set.contains(&b);
        }
        if let Some(r) = report_param(report, "r") {
            return r_set.contains(&r);
        }
        false
    });
    match format {
        Format::Json => {
            for report in selected {
                print_json(&serde_json::to_value(report).expect("report serializes"));
            }
        }
        Format::Table => {
            println!(
                "{}  [{},{}] over GF({})",
                code.descriptor(),
                code.n(),
                code.k(),
                code.field().q()
            );
            for report in selected {
                let selector = report_param(report, "b")
                    .map(|b| format!("b={b}"))
                    .or_else(|| report_param(report, "r").map(|r| format!("r={r}")))
                    .unwrap_or_default();
                let status = if !report.applicable {
                    "inapplicable".to_string()
                } else {
                    format!(
                        "{} {} {}{}",
                        report.lhs,
                        if report.holds { "vs" } else { "VIOLATES" },
                        report.rhs,
                        if report.tight { "  TIGHT" } else { "" }
                    )
                };
                println!("{:34} {:5} {status}", report.bound_id, selector);
            }
        }
    }
    Ok(0)
}

fn cmd_construct(args: &ConstructArgs, format: Format) -> Result<u8, Error> {
    let (code, body) = match args.family {
        Family::Simplex => {
            if args.delta.is_some() {
                return Err(Error::Invalid(
                    "the simplex family has delta fixed at 1; drop --delta".into(),
                ));
            }
            let code = CyclicCode::simplex(args.q, args.k)?;
            let body = json!({ "family": "simplex" });
            (code, body)
        }
        Family::Irreducible => {
            let delta = args
                .delta
                .ok_or_else(|| Error::Invalid("the irreducible family needs --delta".into()))?;
            let (code, report) = CyclicCode::irreducible(args.q, args.k, delta)?;
            let body = json!({
                "family": "irreducible",
                "construction": report,
            });
            (code, body)
        }
    };
    let mut body = body;
    body["descriptor"] = json!(code.descriptor());
    body["q"] = json!(code.field().q());
    body["n"] = json!(code.n());
    body["k"] = json!(code.k());
    body["generator"] = json!(format_elements(
        code.field(),
        code.generator_poly().coeffs()
    ));
    match format {
        Format::Json => print_json(&body),
        Format::Table => println!(
            "{}  [{},{}] over GF({})",
            code.descriptor(),
            code.n(),
            code.k(),
            code.field().q()
        ),
    }
    Ok(0)
}

fn emit_records(
    records: &[SearchRecord],
    out: &Option<PathBuf>,
    format: Format,
) -> Result<Vec<String>, Error> {
    match out {
        Some(path) => {
            let csv = write_reports(records, path)?;
            Ok(vec![
                path.display().to_string(),
                csv.display().to_string(),
            ])
        }
        None => {
            let join = |values: &[usize]| {
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            for record in records {
                match format {
                    Format::Json => {
                        print_json(&serde_json::to_value(record).expect("record serializes"))
                    }
                    Format::Table => {
                        let d = record
                            .bsymbol
                            .as_ref()
                            .map_or("(skipped)".to_string(), |h| join(&h.values[..record.k]));
                        let g = record
                            .ghw
                            .as_ref()
                            .map_or("(skipped)".to_string(), |h| join(&h.values));
                        println!(
                            "{:24} [{},{}]  d: {}  ghw: {}",
                            record.descriptor, record.n, record.k, d, g
                        );
                    }
                }
            }
            Ok(Vec::new())
        }
    }
}

fn print_violation(violation: &Violation) {
    print_json(&json!({
        "violation": violation,
    }));
    eprintln!(
        "bsym: check {} failed on {}; the record above reproduces it",
        violation.check_id, violation.descriptor
    );
}

fn cmd_search(args: &SweepArgs, format: Format) -> Result<u8, Error> {
    let spec = args.spec(BPolicy::ProperDivisors);
    let started = Instant::now();
    let outcome = run_conjecture_search(&spec)?;
    eprintln!(
        "examined {} codes in {:.1}s",
        outcome.records.len(),
        started.elapsed().as_secs_f64()
    );
    let files = emit_records(&outcome.records, &spec.out, format)?;
    if let Some(v) = &outcome.violation {
        print_violation(v);
        return Ok(1);
    }
    let mut summary = serde_json::to_value(&outcome.verdict).expect("verdict serializes");
    if !files.is_empty() {
        summary["files"] = json!(files);
    }
    match format {
        Format::Json => print_json(&summary),
        Format::Table => match &outcome.verdict {
            ConjectureVerdict::NoCounterexample {
                pairs_checked,
                codes_examined,
                skips,
            } => println!(
                "no counterexample: {pairs_checked} (code, b) pairs over {codes_examined} codes, {skips} skips"
            ),
            ConjectureVerdict::Counterexample {
                pairs_checked,
                codes_examined,
                certificate,
                ..
            } => println!(
                "COUNTEREXAMPLE after {pairs_checked} pairs over {codes_examined} codes: {certificate}"
            ),
        },
    }
    Ok(match outcome.verdict {
        ConjectureVerdict::NoCounterexample { .. } => 0,
        ConjectureVerdict::Counterexample { .. } => 2,
    })
}

fn cmd_harness(args: &SweepArgs, format: Format) -> Result<u8, Error> {
    let spec = args.spec(BPolicy::AllUpToK);
    let started = Instant::now();
    let outcome = run_theorem_harness(&spec)?;
    eprintln!(
        "examined {} codes in {:.1}s",
        outcome.records.len(),
        started.elapsed().as_secs_f64()
    );
    let files = emit_records(&outcome.records, &spec.out, format)?;
    if let Some(v) = &outcome.violation {
        print_violation(v);
        return Ok(1);
    }
    match format {
        Format::Json => {
            let mut summary = json!({
                "codes": outcome.records.len(),
                "checks": outcome.summary,
                "violation": Value::Null,
            });
            if !files.is_empty() {
                summary["files"] = json!(files);
            }
            print_json(&summary);
        }
        Format::Table => {
            println!("codes examined: {}", outcome.records.len());
            for (check, count) in &outcome.summary {
                println!("{check:34} {count}");
            }
            println!("violations: none");
        }
    }
    Ok(0)
}
