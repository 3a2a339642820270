//! Command-line front end: argument parsing, dispatch, JSON and CSV report
//! rendering, and cache-backed replay of exact search results.
//!
//! Every JSON report is wrapped in an envelope carrying the command name,
//! the tool version, the parameter map, and (for randomized suites) the
//! seed, so any output can be reproduced from the report alone.  CSV tables
//! carry the same information in a leading `#` comment line.  Exit codes:
//! 0 for completed runs, 2 for usage or input rejection, 3 for partial
//! results (budget exhaustion or a size gate).

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::audit::{
    check_final_availability_bounds, check_step_availability_bounds, check_tail_sum_bounds,
};
use crate::cache::{pattern_key, CacheRecord, ResultCache};
use crate::colorings::{candidate_complete, candidate_turan, nest};
use crate::error::{Error, Result};
use crate::friendliness::{is_h_friendly, kplus_friendly_probe, PartiteHost};
use crate::io::{format_colored, format_nested, load_pattern, parse_colored, parse_multigraph};
use crate::packing::{
    find_packing, pad, product_bound_applies, sum_bound_applies, verify_packing,
    verify_packing_theorems,
};
use crate::pattern::PatternMultigraph;
use crate::rational::{rat_i, Rational};
use crate::solver::{
    exk_branch_and_bound, exk_bruteforce, verify_constructions_free, BoundStatus, ExkInstance,
    ExkResult, SolverOptions, DEFAULT_BUDGET,
};

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

/// Top-level argument grammar.
#[derive(Debug, Parser)]
#[command(
    name = "mct",
    version,
    about = "Exact computations around rainbow-free colorings of multigraphs",
    propagate_version = true
)]
pub struct Cli {
    /// Seed for randomized suites; recorded in their reports.
    #[arg(long, global = true, default_value_t = 2026)]
    pub seed: u64,

    /// Directory holding the append-only result cache.
    #[arg(long, global = true, env = "MCT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximize the edge total of an n-vertex host admitting a rainbow-free
    /// simple k-coloring.
    Exk(ExkArgs),
    /// Check that both closed-form candidate hosts are rainbow-free and
    /// report the lower bound they certify.
    Free(FreeArgs),
    /// Rewrite a colored multigraph into its level-set (nested) form.
    Nest(NestArgs),
    /// Pack two graphs edge-disjointly, or stress-test the two packing
    /// guarantees over small graphs.
    Pack(PackArgs),
    /// Decide friendliness of a partite host, or probe the k-fold surrogate
    /// host when no host file is given.
    Friendly(FriendlyArgs),
    /// Exact-arithmetic audits of the availability and tail-sum inequalities.
    Audit(AuditArgs),
    /// Emit a candidate coloring (balanced-partite or uniform-complete).
    Construct(ConstructArgs),
    /// Sweep the maximizer over a grid of patterns, n, and k, with regime
    /// and band markers per cell.
    Sweep(SweepArgs),
}

/// Two-state switch with explicit names, so flags read `--symmetry on`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

/// Report format for commands that support both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
}

/// Candidate families `construct` can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HostKind {
    /// k identical copies of the balanced complete (r-1)-partite graph.
    Turan,
    /// h-1 copies of the complete graph plus empty colors.
    Complete,
}

#[derive(Debug, Args)]
pub struct ExkArgs {
    /// Host vertex count.
    #[arg(long)]
    pub n: usize,

    /// Number of colors.
    #[arg(long)]
    pub k: u32,

    /// Forbidden pattern: a builtin alias (k3, k4, k5, c5) or a file path.
    #[arg(long, default_value = "k3")]
    pub pattern: String,

    /// Work budget in search nodes; exceeding it yields bracketed bounds.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// First-row symmetry pruning (the optima set is unaffected).
    #[arg(long, value_enum, default_value_t = Switch::Off)]
    pub symmetry: Switch,

    /// Use the exhaustive odometer engine instead of branch and bound.
    /// Bypasses the cache so each engine replays only its own records.
    #[arg(long)]
    pub brute: bool,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct FreeArgs {
    /// Host vertex count.
    #[arg(long)]
    pub n: usize,

    /// Number of colors.
    #[arg(long)]
    pub k: u32,

    /// Forbidden pattern: a builtin alias or a file path.
    #[arg(long, default_value = "k3")]
    pub pattern: String,
}

#[derive(Debug, Args)]
pub struct NestArgs {
    /// Colored multigraph file to read.
    #[arg(long)]
    pub input: PathBuf,

    /// Output path for the nested coloring; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    /// First graph file (simple: every multiplicity 1).
    #[arg(long)]
    pub g: Option<PathBuf>,

    /// Second graph file.
    #[arg(long = "h")]
    pub h: Option<PathBuf>,

    /// Stress-test both packing guarantees instead of packing one pair:
    /// exhaustive over isomorphism classes up to min(nmax, 5) vertices,
    /// then `samples` random in-hypothesis pairs per n up to nmax.
    #[arg(long)]
    pub verify: bool,

    /// Largest vertex count for --verify.
    #[arg(long, default_value_t = 5)]
    pub nmax: usize,

    /// Random pairs per vertex count beyond 5 for --verify.
    #[arg(long, default_value_t = 300)]
    pub samples: u64,
}

#[derive(Debug, Args)]
pub struct FriendlyArgs {
    /// Forbidden pattern: a builtin alias or a file path.
    #[arg(long)]
    pub pattern: String,

    /// Number of host classes; defaults to (chromatic number - 1).
    #[arg(long)]
    pub parts: Option<usize>,

    /// Class size; defaults to host vertices / parts, or for the surrogate
    /// probe to the smallest maximum class size over critical colorings.
    #[arg(long)]
    pub t: Option<usize>,

    /// Number of colors.
    #[arg(long)]
    pub k: u32,

    /// Host multiplicity file; omitted, the k-fold surrogate host is probed.
    #[arg(long)]
    pub host: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[command(subcommand)]
    pub check: AuditCheck,
}

#[derive(Debug, Subcommand)]
pub enum AuditCheck {
    /// Per-step availability lower bounds, exact rationals, 5 <= r <= rmax.
    Steps {
        #[arg(long, default_value_t = 100)]
        rmax: usize,
    },
    /// Final-step availability lower bounds, exact rationals.
    Final {
        #[arg(long, default_value_t = 100)]
        rmax: usize,
    },
    /// Tail-sum bound on complete-support patterns: one file, or random
    /// samples with r in {5,6,7} and multiplicities in 1..=3.
    Tails {
        /// Pattern to audit: a builtin alias or a file path.
        #[arg(long)]
        pattern: Option<String>,

        /// Number of random patterns to audit instead.
        #[arg(long)]
        random: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Candidate family to emit.
    #[arg(long = "type", value_enum)]
    pub kind: HostKind,

    /// Host vertex count.
    #[arg(long)]
    pub n: usize,

    /// Clique size the partite host avoids; required for --type turan.
    #[arg(long)]
    pub r: Option<usize>,

    /// Pattern edge count; the complete host has multiplicity h-1.
    /// Required for --type complete.
    #[arg(long = "h")]
    pub h: Option<u64>,

    /// Number of colors.
    #[arg(long)]
    pub k: u32,

    /// Output path; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated patterns: builtin aliases or file paths.
    #[arg(long, default_value = "k3", value_delimiter = ',')]
    pub patterns: Vec<String>,

    /// Smallest host vertex count.
    #[arg(long)]
    pub n_min: usize,

    /// Largest host vertex count.
    #[arg(long)]
    pub n_max: usize,

    /// Smallest number of colors.
    #[arg(long)]
    pub k_min: u32,

    /// Largest number of colors.
    #[arg(long)]
    pub k_max: u32,

    /// Work budget per cell.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// First-row symmetry pruning for every cell.
    #[arg(long, value_enum, default_value_t = Switch::Off)]
    pub symmetry: Switch,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

/// Parses `std::env::args`, runs the command, prints its report, and returns
/// the process exit code.
pub fn run_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Usage errors exit 2, --help and --version exit 0.
        Err(e) => e.exit(),
    };
    match execute(&cli) {
        Ok((code, output)) => {
            print!("{output}");
            let _ = std::io::stdout().flush();
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}

/// Runs one parsed command and returns (exit code, rendered report).
pub fn execute(cli: &Cli) -> Result<(i32, String)> {
    match &cli.command {
        Command::Exk(args) => run_exk(cli, args),
        Command::Free(args) => run_free(args),
        Command::Nest(args) => run_nest(args),
        Command::Pack(args) => run_pack(cli, args),
        Command::Friendly(args) => run_friendly(args),
        Command::Audit(args) => run_audit(cli, args),
        Command::Construct(args) => run_construct(args),
        Command::Sweep(args) => run_sweep(cli, args),
    }
}

/// Exit code for an error that aborted a run.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) => 2,
        Error::SizeLimit(_) => 3,
        Error::ContractViolation(_) | Error::Io(_) => 1,
    }
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

/// Envelope around every JSON report; carries enough to reproduce the run.
#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    command: &'a str,
    version: &'a str,
    params: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    result: &'a T,
}

fn render_json<T: Serialize>(
    command: &str,
    params: serde_json::Value,
    seed: Option<u64>,
    result: &T,
) -> Result<String> {
    let report = Report {
        command,
        version: env!("CARGO_PKG_VERSION"),
        params,
        seed,
        result,
    };
    serde_json::to_string_pretty(&report)
        .map(|s| s + "\n")
        .map_err(|e| Error::contract(format!("report serialization failed: {e}")))
}

/// Serializes a report and adds a top-level `pass` verdict field.
fn with_pass<T: Serialize>(report: &T, pass: bool) -> Result<serde_json::Value> {
    let mut value = serde_json::to_value(report)
        .map_err(|e| Error::contract(format!("report serialization failed: {e}")))?;
    if let Some(map) = value.as_object_mut() {
        map.insert("pass".to_string(), json!(pass));
    }
    Ok(value)
}

/// CSV fields never contain separators: commas are replaced in free text.
fn csv_field(s: &str) -> String {
    s.replace(',', ";")
}

/// `#`-prefixed provenance line leading every CSV table.
fn csv_preamble(command: &str, params: &serde_json::Value) -> String {
    format!(
        "# {command} version={} params={params}\n",
        env!("CARGO_PKG_VERSION")
    )
}

// ---------------------------------------------------------------------------
// exk
// ---------------------------------------------------------------------------

fn run_exk(cli: &Cli, args: &ExkArgs) -> Result<(i32, String)> {
    let pattern = load_pattern(&args.pattern)?;
    let inst = ExkInstance::new(args.n, args.k, pattern.clone())?;
    let options = SolverOptions {
        budget: args.budget,
        symmetry: args.symmetry == Switch::On,
    };
    let result = if args.brute {
        exk_bruteforce(&inst, &options)?
    } else {
        solve_with_cache(cli.cache_dir.as_deref(), &inst, &pattern, &options)?
    };
    let code = if result.status.is_exact() { 0 } else { 3 };
    let params = json!({
        "n": args.n,
        "k": args.k,
        "pattern": args.pattern,
        "budget": args.budget,
        "symmetry": args.symmetry == Switch::On,
        "brute": args.brute,
    });
    let output = match args.emit {
        Emit::Json => render_json("exk", params, None, &result)?,
        Emit::Csv => {
            let mut out = csv_preamble("exk", &params);
            out.push_str("n,k,value,lower,upper,status,classification,candidate_i,candidate_ii,optima,work\n");
            out.push_str(&exk_csv_row(&result));
            out
        }
    };
    Ok((code, output))
}

/// Runs the branch-and-bound engine, replaying an exact cached result when
/// one exists and appending fresh results to the cache.
fn solve_with_cache(
    cache_dir: Option<&std::path::Path>,
    inst: &ExkInstance,
    pattern: &PatternMultigraph,
    options: &SolverOptions,
) -> Result<ExkResult> {
    let Some(dir) = cache_dir else {
        return exk_branch_and_bound(inst, options);
    };
    let cache = ResultCache::open(dir)?;
    let key = pattern_key(pattern);
    if let Some(record) = cache.lookup(inst.n, inst.k, &key)? {
        if record.status.is_exact() {
            return record.to_result();
        }
    }
    let start = Instant::now();
    let result = exk_branch_and_bound(inst, options)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    cache.append(&CacheRecord::from_result(&result, pattern, wall_ms))?;
    Ok(result)
}

fn exk_csv_row(result: &ExkResult) -> String {
    let (lower, upper, status) = match result.status {
        BoundStatus::Exact => (result.value, result.value, "exact"),
        BoundStatus::Bounded { lower, upper } => (lower, upper, "bounded"),
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}\n",
        result.n,
        result.k,
        result.value,
        lower,
        upper,
        status,
        result.classification.label(),
        result
            .candidate_i
            .map(|v| v.to_string())
            .unwrap_or_default(),
        result.candidate_ii,
        result.optima.len(),
        result.work,
    )
}

// ---------------------------------------------------------------------------
// free
// ---------------------------------------------------------------------------

fn run_free(args: &FreeArgs) -> Result<(i32, String)> {
    let pattern = load_pattern(&args.pattern)?;
    let report = verify_constructions_free(args.n, args.k, &pattern)?;
    let result = with_pass(&report, report.pass())?;
    let params = json!({
        "n": args.n,
        "k": args.k,
        "pattern": args.pattern,
    });
    Ok((0, render_json("free", params, None, &result)?))
}

// ---------------------------------------------------------------------------
// nest
// ---------------------------------------------------------------------------

fn run_nest(args: &NestArgs) -> Result<(i32, String)> {
    let text = fs::read_to_string(&args.input)?;
    let parsed = parse_colored(&text)?;
    let nested = nest(&parsed.colored);
    let rendered = format_nested(&nested);
    match &args.output {
        Some(path) => {
            fs::write(path, &rendered)?;
            let result = json!({
                "n": parsed.colored.n(),
                "k": parsed.colored.k(),
                "total_edges": parsed.colored.total_edges(),
                "output": path.display().to_string(),
            });
            let params = json!({
                "input": args.input.display().to_string(),
                "output": path.display().to_string(),
            });
            Ok((0, render_json("nest", params, None, &result)?))
        }
        None => Ok((0, rendered)),
    }
}

// ---------------------------------------------------------------------------
// pack
// ---------------------------------------------------------------------------

fn run_pack(cli: &Cli, args: &PackArgs) -> Result<(i32, String)> {
    if args.verify {
        let report = verify_packing_theorems(args.nmax, args.samples, cli.seed);
        let result = with_pass(&report, report.pass())?;
        let params = json!({
            "verify": true,
            "nmax": args.nmax,
            "samples": args.samples,
        });
        return Ok((0, render_json("pack", params, Some(cli.seed), &result)?));
    }
    let (Some(g_path), Some(h_path)) = (&args.g, &args.h) else {
        return Err(Error::invalid(
            "pack needs --verify, or both --g and --h graph files",
        ));
    };
    let g = load_simple_graph(g_path)?;
    let h = load_simple_graph(h_path)?;
    let n = g.n().max(h.n());
    let g = pad(&g, n)?;
    let h = pad(&h, n)?;
    let product = product_bound_applies(&g, &h);
    let sum = sum_bound_applies(&g, &h);
    let packing = find_packing(&g, &h);
    if let Some(p) = &packing {
        verify_packing(&g, &h, p)?;
    }
    let result = json!({
        "n": n,
        "edges_g": g.edge_count(),
        "edges_h": h.edge_count(),
        "product_bound_applies": product,
        "sum_bound_applies": sum,
        "guaranteed": product || sum,
        "packed": packing.is_some(),
        "sigma": packing.as_ref().map(|p| p.sigma.clone()),
    });
    let params = json!({
        "g": g_path.display().to_string(),
        "h": h_path.display().to_string(),
    });
    Ok((0, render_json("pack", params, None, &result)?))
}

/// Reads a multiplicity-map file and checks it is a simple graph.
fn load_simple_graph(path: &std::path::Path) -> Result<crate::graphs::SimpleGraph> {
    let text = fs::read_to_string(path)?;
    let g = parse_multigraph(&text, None)?;
    if g.max_multiplicity() > 1 {
        return Err(Error::invalid(format!(
            "{} has a pair with multiplicity {}, but packing takes simple graphs",
            path.display(),
            g.max_multiplicity()
        )));
    }
    Ok(g.support())
}

// ---------------------------------------------------------------------------
// friendly
// ---------------------------------------------------------------------------

fn run_friendly(args: &FriendlyArgs) -> Result<(i32, String)> {
    let pattern = load_pattern(&args.pattern)?;
    let default_parts = pattern.chi().saturating_sub(1);
    let parts = args.parts.unwrap_or(default_parts);
    if parts != default_parts {
        return Err(Error::invalid(format!(
            "the pattern needs {default_parts} host classes, got --parts {parts}"
        )));
    }
    let params = json!({
        "pattern": args.pattern,
        "parts": parts,
        "t": args.t,
        "k": args.k,
        "host": args.host.as_ref().map(|p| p.display().to_string()),
    });
    match &args.host {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let w = parse_multigraph(&text, Some(args.k))?;
            let t = match args.t {
                Some(t) => t,
                None => infer_class_size(w.n(), parts)?,
            };
            let host = PartiteHost::new(parts, t, w)?;
            let report = is_h_friendly(&host, &pattern)?;
            Ok((0, render_json("friendly", params, None, &report)?))
        }
        None => {
            let report = kplus_friendly_probe(&pattern, args.k, args.t)?;
            Ok((0, render_json("friendly", params, None, &report)?))
        }
    }
}

fn infer_class_size(n: usize, parts: usize) -> Result<usize> {
    if parts == 0 || n % parts != 0 {
        return Err(Error::invalid(format!(
            "host has {n} vertices, not divisible into {parts} equal classes; pass --t"
        )));
    }
    Ok(n / parts)
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

fn run_audit(cli: &Cli, args: &AuditArgs) -> Result<(i32, String)> {
    match &args.check {
        AuditCheck::Steps { rmax } => {
            let report = check_step_availability_bounds(*rmax)?;
            let result = with_pass(&report, report.pass())?;
            let params = json!({ "check": "steps", "rmax": rmax });
            Ok((0, render_json("audit", params, None, &result)?))
        }
        AuditCheck::Final { rmax } => {
            let report = check_final_availability_bounds(*rmax)?;
            let result = with_pass(&report, report.pass())?;
            let params = json!({ "check": "final", "rmax": rmax });
            Ok((0, render_json("audit", params, None, &result)?))
        }
        AuditCheck::Tails { pattern, random } => run_audit_tails(cli, pattern, random),
    }
}

fn run_audit_tails(
    cli: &Cli,
    pattern: &Option<String>,
    random: &Option<u64>,
) -> Result<(i32, String)> {
    match (pattern, random) {
        (Some(name), None) => {
            let pattern = load_pattern(name)?;
            let report = check_tail_sum_bounds(&pattern)?;
            let result = with_pass(&report, report.pass())?;
            let params = json!({ "check": "tails", "pattern": name });
            Ok((0, render_json("audit", params, None, &result)?))
        }
        (None, Some(count)) => {
            let summary = random_tail_sum_audit(*count, cli.seed)?;
            let params = json!({ "check": "tails", "random": count });
            Ok((0, render_json("audit", params, Some(cli.seed), &summary)?))
        }
        _ => Err(Error::invalid(
            "audit tails needs exactly one of --pattern or --random",
        )),
    }
}

/// Aggregate of a random tail-sum audit.
#[derive(Debug, Serialize)]
pub struct TailSumSampleSummary {
    pub patterns_checked: u64,
    pub rows_checked: u64,
    pub violations: u64,
    /// Smallest margin seen, as an exact rational string.
    pub worst_margin: Option<String>,
    pub pass: bool,
}

/// Audits `count` random complete-support patterns with r in {5,6,7} and
/// multiplicities drawn uniformly from 1..=3.
pub fn random_tail_sum_audit(count: u64, seed: u64) -> Result<TailSumSampleSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows_checked = 0u64;
    let mut violations = 0u64;
    let mut worst: Option<Rational> = None;
    for _ in 0..count {
        let r = rng.gen_range(5..=7usize);
        let mut pairs = Vec::with_capacity(r * (r - 1) / 2);
        for u in 0..r {
            for v in (u + 1)..r {
                pairs.push((u, v, rng.gen_range(1..=3u32)));
            }
        }
        let pattern = PatternMultigraph::new(r, &pairs)?;
        let report = check_tail_sum_bounds(&pattern)?;
        for row in &report.rows {
            rows_checked += 1;
            if !row.holds {
                violations += 1;
            }
            let margin: Rational = row
                .margin
                .parse()
                .map_err(|e| Error::contract(format!("unreadable margin {}: {e}", row.margin)))?;
            if worst.as_ref().map_or(true, |w| margin < *w) {
                worst = Some(margin);
            }
        }
    }
    Ok(TailSumSampleSummary {
        patterns_checked: count,
        rows_checked,
        violations,
        worst_margin: worst.map(|w| w.to_string()),
        pass: violations == 0,
    })
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

fn run_construct(args: &ConstructArgs) -> Result<(i32, String)> {
    let colored = match args.kind {
        HostKind::Turan => {
            let Some(r) = args.r else {
                return Err(Error::invalid("--type turan needs --r"));
            };
            candidate_turan(args.n, r, args.k)?
        }
        HostKind::Complete => {
            let Some(h) = args.h else {
                return Err(Error::invalid("--type complete needs --h"));
            };
            candidate_complete(args.n, h, args.k)?
        }
    };
    // Both families put identical or prefix-complete graphs in their colors,
    // so they are their own level-set forms.
    let rendered = format_colored(&colored, true);
    match &args.output {
        Some(path) => {
            fs::write(path, &rendered)?;
            let result = json!({
                "n": colored.n(),
                "k": colored.k(),
                "total_edges": colored.total_edges(),
                "output": path.display().to_string(),
            });
            let params = json!({
                "type": match args.kind {
                    HostKind::Turan => "turan",
                    HostKind::Complete => "complete",
                },
                "n": args.n,
                "r": args.r,
                "h": args.h,
                "k": args.k,
            });
            Ok((0, render_json("construct", params, None, &result)?))
        }
        None => Ok((0, rendered)),
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

/// One sweep cell's outcome, with the formula-side markers for its pattern.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub pattern: String,
    pub n: usize,
    pub k: u32,
    pub value: Option<u64>,
    /// exact | bounded | skipped | error
    pub status: String,
    pub classification: String,
    pub candidate_i: Option<u64>,
    pub candidate_ii: Option<u64>,
    /// The crossover (chi-1)(h-1)/(chi-2) between the two candidate
    /// formulas, as an exact rational string.
    pub regime_boundary: String,
    /// below (k < h) | lower (h <= k < boundary) | upper (k >= boundary).
    pub regime: String,
    /// Whether k lies in the multiplicity-cap band
    /// h <= k <= h + floor(chi/2) - 1.
    pub cap_band: bool,
    pub work: Option<u64>,
    pub note: String,
}

/// The crossover point between the two candidate formulas, exact.
pub fn regime_boundary(chi: usize, h: u64) -> Rational {
    rat_i((chi as i64 - 1) * (h as i64 - 1)) / rat_i(chi as i64 - 2)
}

/// Places k against the pattern's two-regime prediction.
pub fn regime_label(chi: usize, h: u64, k: u32) -> &'static str {
    let k = u64::from(k);
    if k < h {
        "below"
    } else if k * (chi as u64 - 2) < (chi as u64 - 1) * (h - 1) {
        "lower"
    } else {
        "upper"
    }
}

/// Whether k lies in the band where optima are expected to respect the
/// per-pair multiplicity cap h - 1.
pub fn in_cap_band(chi: usize, h: u64, k: u32) -> bool {
    let k = u64::from(k);
    h <= k && k <= h + (chi as u64 / 2) - 1
}

struct SweepCell<'a> {
    name: &'a str,
    pattern: &'a PatternMultigraph,
    n: usize,
    k: u32,
}

fn run_sweep(cli: &Cli, args: &SweepArgs) -> Result<(i32, String)> {
    let mut patterns = Vec::with_capacity(args.patterns.len());
    for name in &args.patterns {
        patterns.push((name.as_str(), load_pattern(name)?));
    }
    let options = SolverOptions {
        budget: args.budget,
        symmetry: args.symmetry == Switch::On,
    };
    let cache = match &cli.cache_dir {
        Some(dir) => Some(ResultCache::open(dir)?),
        None => None,
    };
    let mut cells = Vec::new();
    for (name, pattern) in &patterns {
        for n in args.n_min..=args.n_max {
            for k in args.k_min..=args.k_max {
                cells.push(SweepCell {
                    name,
                    pattern,
                    n,
                    k,
                });
            }
        }
    }
    // Cells solve in parallel; the cache is only read here.  Appends happen
    // afterwards on this thread, keeping a single writer.
    let outcomes: Vec<(SweepRow, Option<CacheRecord>)> = cells
        .par_iter()
        .map(|cell| sweep_cell(cell, &options, cache.as_ref()))
        .collect();
    let mut rows = Vec::with_capacity(outcomes.len());
    let mut partial = false;
    for (row, record) in outcomes {
        if row.status == "bounded" || row.status == "error" {
            partial = true;
        }
        if let (Some(cache), Some(record)) = (&cache, &record) {
            cache.append(record)?;
        }
        rows.push(row);
    }
    let code = if partial { 3 } else { 0 };
    let params = json!({
        "patterns": args.patterns,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "k_min": args.k_min,
        "k_max": args.k_max,
        "budget": args.budget,
        "symmetry": args.symmetry == Switch::On,
    });
    let output = match args.emit {
        Emit::Csv => {
            let mut out = csv_preamble("sweep", &params);
            out.push_str(
                "pattern,n,k,value,status,classification,candidate_i,candidate_ii,regime_boundary,regime,cap_band,work,note\n",
            );
            for row in &rows {
                out.push_str(&sweep_csv_row(row));
            }
            out
        }
        Emit::Json => {
            let result = json!({
                "cells": rows.len(),
                "partial": partial,
                "rows": rows,
            });
            render_json("sweep", params, None, &result)?
        }
    };
    Ok((code, output))
}

fn sweep_cell(
    cell: &SweepCell,
    options: &SolverOptions,
    cache: Option<&ResultCache>,
) -> (SweepRow, Option<CacheRecord>) {
    let chi = cell.pattern.chi();
    let h = cell.pattern.h();
    let mut row = SweepRow {
        pattern: csv_field(cell.name),
        n: cell.n,
        k: cell.k,
        value: None,
        status: String::new(),
        classification: String::new(),
        candidate_i: None,
        candidate_ii: None,
        regime_boundary: regime_boundary(chi, h).to_string(),
        regime: regime_label(chi, h, cell.k).to_string(),
        cap_band: in_cap_band(chi, h, cell.k),
        work: None,
        note: String::new(),
    };
    let inst = match ExkInstance::new(cell.n, cell.k, cell.pattern.clone()) {
        Ok(inst) => inst,
        Err(e) => {
            row.status = "skipped".to_string();
            row.note = csv_field(&e.to_string());
            return (row, None);
        }
    };
    if let Some(cache) = cache {
        let key = pattern_key(cell.pattern);
        if let Ok(Some(record)) = cache.lookup(cell.n, cell.k, &key) {
            if record.status.is_exact() {
                if let Ok(result) = record.to_result() {
                    fill_sweep_row(&mut row, &result);
                    return (row, None);
                }
            }
        }
    }
    let start = Instant::now();
    match exk_branch_and_bound(&inst, options) {
        Ok(result) => {
            let wall_ms = start.elapsed().as_millis() as u64;
            let record = CacheRecord::from_result(&result, cell.pattern, wall_ms);
            fill_sweep_row(&mut row, &result);
            (row, Some(record))
        }
        Err(e) => {
            row.status = "error".to_string();
            row.note = csv_field(&e.to_string());
            (row, None)
        }
    }
}

fn fill_sweep_row(row: &mut SweepRow, result: &ExkResult) {
    row.value = Some(result.value);
    row.classification = result.classification.label().to_string();
    row.candidate_i = result.candidate_i;
    row.candidate_ii = Some(result.candidate_ii);
    row.work = Some(result.work);
    match result.status {
        BoundStatus::Exact => {
            row.status = "exact".to_string();
        }
        BoundStatus::Bounded { lower, upper } => {
            row.status = "bounded".to_string();
            row.note = format!("budget exhausted; value in [{lower}; {upper}]");
        }
    }
}

fn sweep_csv_row(row: &SweepRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        row.pattern,
        row.n,
        row.k,
        row.value.map(|v| v.to_string()).unwrap_or_default(),
        row.status,
        row.classification,
        row.candidate_i.map(|v| v.to_string()).unwrap_or_default(),
        row.candidate_ii.map(|v| v.to_string()).unwrap_or_default(),
        row.regime_boundary,
        row.regime,
        row.cap_band,
        row.work.map(|v| v.to_string()).unwrap_or_default(),
        row.note,
    )
}
