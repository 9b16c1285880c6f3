//! The `pconvex` command line.
//!
//! ```text
//! pconvex run <instance.json> [--seed N] [--out report.json] [--replay report.json]
//! pconvex ew  <instance.json> --problem NAME --csv out.csv [--seed N] [--out report.json]
//! ```
//!
//! Exit codes: `0` everything behaved as declared, `1` a consequence check
//! failed, an expected counterexample was not found, a check errored or a
//! replayed witness did not reproduce, `2` at least one expected
//! counterexample was found (and nothing failed), `64` usage, parse or
//! validation errors, `74` output could not be written.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certify::{
    check_closure_pconvexity, check_cone_equivalence, check_downgrade, check_homogeneous_convexity,
    check_interior_pconvexity, check_segment_interior, closure_proxy, construct_ball_counterexample,
    falsify_fn_pconvexity, falsify_set_pconvexity, interior_proxy, run_consequence_suite, SearchBudget, Verdict,
    Witness,
};
use crate::error::{Error, Result};
use crate::instance::{CheckKind, CheckSpec, Expect, Instance};
use crate::pcore::{g_argmin, scaling_g, PExponent};
use crate::psets::{Boundary, SetDescriptor};
use crate::report::CheckLine;
use crate::weff::{
    check_intersection_equality, check_union_inclusion, is_rm_p_convex, run_structure_suite, weakly_efficient_set,
    EfficiencyReport,
};

pub const DEFAULT_SEED: u64 = 42;
pub const SEED_ENV: &str = "PCONVEX_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Pass,
    /// A consequence line failed or an unexpected counterexample was found.
    Fail,
    /// A counterexample was found, as declared.
    ExpectedCounterexample,
    /// A counterexample was declared but none was found.
    MissingCounterexample,
    Error,
}

impl RecordStatus {
    fn exit_code(self) -> i32 {
        match self {
            RecordStatus::Pass => EXIT_OK,
            RecordStatus::ExpectedCounterexample => EXIT_COUNTEREXAMPLE,
            _ => EXIT_FAILURE,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub kind: String,
    pub expect: Expect,
    pub status: RecordStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<usize>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub lines: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Value::is_null", default)]
    pub details: Value,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReplayResult {
    pub check: String,
    pub stored_violation: f64,
    pub recomputed: Option<f64>,
    pub reproduced: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub expected_counterexample: usize,
    pub missing_counterexample: usize,
    pub error: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub replay_failures: Option<usize>,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub instance_digest: String,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub replay: Option<Vec<ReplayResult>>,
    pub summary: Summary,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn record(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}

/// Seed precedence: explicit flag, then `PCONVEX_SEED`, then 42.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

struct Outcome {
    verdict: Option<Verdict>,
    lines: Vec<CheckLine>,
    details: Value,
}

impl Outcome {
    fn verdict(v: Verdict) -> Self {
        Self {
            verdict: Some(v),
            lines: Vec::new(),
            details: Value::Null,
        }
    }

    fn lines(lines: Vec<CheckLine>, details: Value) -> Self {
        Self {
            verdict: None,
            lines,
            details,
        }
    }

    /// A counterexample was found or a line failed.
    fn falsified(&self) -> bool {
        self.verdict.as_ref().is_some_and(Verdict::is_falsified) || self.lines.iter().any(CheckLine::failed)
    }
}

fn budget_for(check: &CheckSpec, seed: u64) -> SearchBudget {
    check.budget.clone().unwrap_or_default().with_seed(seed)
}

fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-12 {
        let c = b - r * (b - a);
        let d = a + r * (b - a);
        if f(c) <= f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

fn g_function_line(p: PExponent) -> Result<CheckLine> {
    const NAME: &str = "g_argmin_matches_numeric";
    if p.is_one() {
        return Ok(CheckLine::not_applicable(NAME, "g is constant at p = 1"));
    }
    let (l, g) = g_argmin(p)?;
    let ln = golden_section_min(|t| scaling_g(t, p).unwrap_or(f64::INFINITY), 0.0, 1.0);
    let gn = scaling_g(ln, p)?;
    let detail = format!("closed form ({l}, {g}), numeric ({ln}, {gn})");
    Ok(if (l - ln).abs() <= 1e-6 && (g - gn).abs() <= 1e-6 {
        CheckLine::pass(NAME, detail)
    } else {
        CheckLine::fail(NAME, detail, Some(vec![ln]))
    })
}

fn efficiency_details(r: &EfficiencyReport) -> Value {
    json!({
        "grid_points": r.grid.len(),
        "excluded": r.excluded,
        "weakly_efficient": r.weakly_efficient,
        "argmins": r.argmins,
    })
}

/// Efficiency report for a problem, with the structural suite when the
/// problem declares `p`.
pub fn solve_problem(instance: &Instance, name: &str, budget: &SearchBudget) -> Result<EfficiencyReport> {
    let problem = instance
        .problems
        .get(name)
        .ok_or_else(|| Error::Instance {
            path: "problem".into(),
            message: format!("unknown problem {name:?}"),
        })?;
    let mut report = weakly_efficient_set(&problem.objectives, &problem.grid, problem.tol)?;
    match problem.p {
        Some(p) => run_structure_suite(&mut report, &problem.objectives, p, budget)?,
        None => report.structural_checks = vec![check_union_inclusion(&report), check_intersection_equality(&report)],
    }
    Ok(report)
}

fn execute(instance: &Instance, check: &CheckSpec, seed: u64) -> Result<Outcome> {
    let budget = budget_for(check, seed);
    let set = |n: &str| instance.sets[n].clone();
    let func = |n: &str| instance.functions[n].clone();
    Ok(match &check.kind {
        CheckKind::FalsifySet { set: s, p } => Outcome::verdict(falsify_set_pconvexity(&set(s), *p, &budget)?),
        CheckKind::FalsifyFn { function, p } => Outcome::verdict(falsify_fn_pconvexity(&func(function), *p, &budget)?),
        CheckKind::Closure { set: s, p } => Outcome::verdict(check_closure_pconvexity(&set(s), *p, &budget)?),
        CheckKind::Interior { set: s, p, probe_radius } => {
            Outcome::verdict(check_interior_pconvexity(&set(s), *p, *probe_radius, &budget)?)
        }
        CheckKind::BallCounterexample {
            center,
            delta,
            q,
            p,
            beta,
            epsilon,
        } => {
            let c = construct_ball_counterexample(center, *delta, *q, *p, *beta, *epsilon)?;
            let mut o = Outcome::verdict(Verdict::Falsified { witness: c.witness });
            o.details = json!({ "z": c.z });
            o
        }
        CheckKind::ConeEquivalence { set: s, p } => {
            let r = check_cone_equivalence(&set(s), *p, &budget)?;
            let line = if r.consistent {
                CheckLine::pass("cone_equivalence", format!(
                    "star_shaped={}, additive_closure={}, cone={}, p_convex={}",
                    r.star_shaped,
                    r.additive_closure,
                    r.cone,
                    !r.p_convex.is_falsified()
                ))
            } else {
                CheckLine::fail("cone_equivalence", "additive closure disagrees with cone + p-convexity", r.witness.clone())
            };
            Outcome::lines(vec![line], serde_json::to_value(&r)?)
        }
        CheckKind::Downgrade { set: s, p, p1 } => {
            let r = check_downgrade(&set(s), *p, *p1, &budget)?;
            let mut o = Outcome::verdict(r.downgraded.clone());
            o.details = json!({ "p": r.p, "p1": r.p1, "base": r.base });
            o
        }
        CheckKind::SegmentInterior {
            set: s,
            p,
            x,
            y,
            probe_radius,
            samples,
        } => {
            let r = check_segment_interior(&set(s), *p, x, y, *probe_radius, *samples)?;
            let line = match &r.failure {
                None => CheckLine::pass("segment_interior", format!("{} points interior", r.checked)),
                Some((lambda, z)) => {
                    CheckLine::fail("segment_interior", format!("not interior at lambda = {lambda}"), Some(z.clone()))
                }
            };
            Outcome::lines(vec![line], Value::Null)
        }
        CheckKind::Consequences { function, p } => {
            Outcome::lines(run_consequence_suite(&func(function), *p, &budget)?.lines, Value::Null)
        }
        CheckKind::HomogeneousConvexity { function, p } => {
            Outcome::lines(vec![check_homogeneous_convexity(&func(function), *p, &budget)?], Value::Null)
        }
        CheckKind::GFunction { p } => Outcome::lines(vec![g_function_line(*p)?], Value::Null),
        CheckKind::RmPConvex { problem } => {
            let pr = &instance.problems[problem];
            let p = pr.p.expect("validated");
            Outcome::verdict(is_rm_p_convex(&pr.objectives, p, &budget)?)
        }
        CheckKind::WeakEfficiency { problem } => {
            let r = solve_problem(instance, problem, &budget)?;
            let details = efficiency_details(&r);
            Outcome::lines(r.structural_checks, details)
        }
    })
}

fn status_for(expect: Expect, outcome: &Outcome) -> RecordStatus {
    match (expect, outcome.falsified()) {
        (Expect::Pass, false) => RecordStatus::Pass,
        (Expect::Pass, true) => RecordStatus::Fail,
        (Expect::Falsified, true) => RecordStatus::ExpectedCounterexample,
        (Expect::Falsified, false) => RecordStatus::MissingCounterexample,
    }
}

/// Runs every check of `instance` in declared order.
pub fn run_instance(instance: &Instance, seed: u64) -> RunReport {
    let mut records = Vec::with_capacity(instance.checks.len());
    for check in &instance.checks {
        let check_seed = check.seed.unwrap_or(seed);
        let start = Instant::now();
        let result = execute(instance, check, check_seed);
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        let record = match result {
            Ok(o) => CheckRecord {
                name: check.name.clone(),
                kind: check.kind.label().to_string(),
                expect: check.expect,
                status: status_for(check.expect, &o),
                witness: o.verdict.as_ref().and_then(|v| v.witness().cloned()),
                samples: o.verdict.as_ref().and_then(Verdict::samples_used),
                verdict: o.verdict,
                seed: check_seed,
                lines: o.lines,
                details: o.details,
                wall_time_ms,
            },
            Err(e) => CheckRecord {
                name: check.name.clone(),
                kind: check.kind.label().to_string(),
                expect: check.expect,
                status: RecordStatus::Error,
                verdict: None,
                witness: None,
                samples: None,
                seed: check_seed,
                lines: Vec::new(),
                details: json!({ "error": e.to_string() }),
                wall_time_ms,
            },
        };
        records.push(record);
    }
    let mut report = RunReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        schema_version: crate::instance::SCHEMA_VERSION,
        instance_digest: instance.digest.clone(),
        seed,
        records,
        replay: None,
        summary: Summary::default(),
    };
    summarize(&mut report);
    report
}

fn summarize(report: &mut RunReport) {
    let mut s = Summary {
        total: report.records.len(),
        ..Summary::default()
    };
    for r in &report.records {
        match r.status {
            RecordStatus::Pass => s.pass += 1,
            RecordStatus::Fail => s.fail += 1,
            RecordStatus::ExpectedCounterexample => s.expected_counterexample += 1,
            RecordStatus::MissingCounterexample => s.missing_counterexample += 1,
            RecordStatus::Error => s.error += 1,
        }
    }
    let mut code = report
        .records
        .iter()
        .map(|r| r.status.exit_code())
        .fold(EXIT_OK, |acc, c| match (acc, c) {
            (EXIT_FAILURE, _) | (_, EXIT_FAILURE) => EXIT_FAILURE,
            (EXIT_COUNTEREXAMPLE, _) | (_, EXIT_COUNTEREXAMPLE) => EXIT_COUNTEREXAMPLE,
            _ => EXIT_OK,
        });
    if let Some(replay) = &report.replay {
        let failures = replay.iter().filter(|r| !r.reproduced).count();
        s.replay_failures = Some(failures);
        if failures > 0 {
            code = EXIT_FAILURE;
        }
    }
    s.exit_code = code;
    report.summary = s;
}

/// Witnesses to replay: either a previous run report or one
/// `{"check": NAME, "witness": {...}}` entry.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ReplayInput {
    Report { records: Vec<ReplayRecord> },
    Single { check: String, witness: Witness },
}

#[derive(Debug, Deserialize)]
struct ReplayRecord {
    name: String,
    #[serde(default)]
    witness: Option<Witness>,
}

fn parse_replay(text: &str) -> Result<Vec<(String, Witness)>> {
    let input: ReplayInput = serde_json::from_str(text).map_err(|e| Error::Instance {
        path: "replay".into(),
        message: e.to_string(),
    })?;
    Ok(match input {
        ReplayInput::Report { records } => records
            .into_iter()
            .filter_map(|r| r.witness.map(|w| (r.name, w)))
            .collect(),
        ReplayInput::Single { check, witness } => vec![(check, witness)],
    })
}

fn replay_one(instance: &Instance, name: &str, w: &Witness) -> Result<Option<f64>> {
    let check = instance
        .checks
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::InvalidParameter(format!("no check named {name:?} in the instance")))?;
    let tol = check.budget.as_ref().map_or(crate::pfuncs::DEFAULT_TOL, |b| b.tol);
    let set = |n: &str| instance.sets[n].clone();
    match &check.kind {
        CheckKind::FalsifySet { set: s, .. } | CheckKind::Downgrade { set: s, .. } => w.replay_set(&set(s)),
        CheckKind::Closure { set: s, .. } => w.replay_set(&closure_proxy(&set(s))?),
        CheckKind::Interior { set: s, probe_radius, .. } => w.replay_set(&interior_proxy(&set(s), *probe_radius)?),
        CheckKind::BallCounterexample {
            center, delta, q, ..
        } => w.replay_set(&SetDescriptor::ball(*q, center.clone(), *delta, Boundary::Open)?),
        CheckKind::FalsifyFn { function, .. } => w.replay_fn(&instance.functions[function], tol),
        CheckKind::RmPConvex { problem } => {
            let comps = instance.problems[problem].objectives.components();
            let k = w.component.unwrap_or(0);
            let f = comps
                .get(k)
                .ok_or_else(|| Error::InvalidParameter(format!("component {k} out of range")))?;
            w.replay_fn(f, tol)
        }
        other => Err(Error::InvalidParameter(format!("checks of kind {} carry no witness", other.label()))),
    }
}

/// Recomputes each witness against the check of the same name.
pub fn replay_witnesses(instance: &Instance, text: &str) -> Result<Vec<ReplayResult>> {
    Ok(parse_replay(text)?
        .into_iter()
        .map(|(check, w)| match replay_one(instance, &check, &w) {
            Ok(recomputed) => ReplayResult {
                reproduced: w.reproduces(recomputed),
                stored_violation: w.violation,
                recomputed,
                check,
                message: None,
            },
            Err(e) => ReplayResult {
                check,
                stored_violation: w.violation,
                recomputed: None,
                reproduced: false,
                message: Some(e.to_string()),
            },
        })
        .collect())
}

/// Writes one row per in-domain grid point: coordinates, objective values
/// and the weak-efficiency flag.
pub fn write_ew_csv<W: Write>(report: &EfficiencyReport, out: W) -> Result<()> {
    if report.in_domain.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let n = report.grid.dim();
    let m = report.objectives();
    let header: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=m).map(|k| format!("f{k}")))
        .chain(std::iter::once("in_ew".to_string()))
        .collect();
    w.write_record(&header)?;
    for (&idx, values) in report.in_domain.iter().zip(&report.values) {
        let row: Vec<String> = report
            .grid
            .point(idx)
            .iter()
            .chain(values)
            .map(|v| v.to_string())
            .chain(std::iter::once(report.is_weakly_efficient(idx).to_string()))
            .collect();
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_ew_csv(report: &EfficiencyReport, path: &Path) -> Result<()> {
    if report.in_domain.is_empty() {
        return Err(Error::EmptyGrid);
    }
    write_ew_csv(report, std::fs::File::create(path)?)
}

#[derive(Debug, Parser)]
#[command(name = "pconvex", version, about = "Falsification search and structural checks for p-convex sets and functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check of an instance and write a JSON report.
    Run {
        instance: PathBuf,
        /// Seed for checks without their own (default: $PCONVEX_SEED or 42).
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute the witnesses of a previous report.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Compute the weakly efficient grid points of one problem.
    Ew {
        instance: PathBuf,
        #[arg(long)]
        problem: String,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the efficiency report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> std::result::Result<(), i32> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_IO
    })?;
    text.push('\n');
    let written = match out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    written.map_err(|e| {
        eprintln!("error: cannot write report: {e}");
        EXIT_IO
    })
}

fn fail_usage(e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn cmd_run(instance: &Path, seed: Option<u64>, out: Option<&Path>, replay: Option<&Path>) -> i32 {
    let seed = match resolve_seed(seed) {
        Ok(s) => s,
        Err(e) => return fail_usage(e),
    };
    let inst = match Instance::load(instance) {
        Ok(i) => i,
        Err(e) => return fail_usage(e),
    };
    let replay_text = match replay.map(std::fs::read_to_string).transpose() {
        Ok(t) => t,
        Err(e) => return fail_usage(format!("cannot read replay file: {e}")),
    };
    let mut report = run_instance(&inst, seed);
    if let Some(text) = replay_text {
        match replay_witnesses(&inst, &text) {
            Ok(r) => report.replay = Some(r),
            Err(e) => return fail_usage(e),
        }
        summarize(&mut report);
    }
    match emit_json(&report, out) {
        Ok(()) => report.exit_code(),
        Err(code) => code,
    }
}

fn cmd_ew(instance: &Path, problem: &str, csv_path: &Path, seed: Option<u64>, out: Option<&Path>) -> i32 {
    let seed = match resolve_seed(seed) {
        Ok(s) => s,
        Err(e) => return fail_usage(e),
    };
    let inst = match Instance::load(instance) {
        Ok(i) => i,
        Err(e) => return fail_usage(e),
    };
    let report = match solve_problem(&inst, problem, &SearchBudget::default().with_seed(seed)) {
        Ok(r) => r,
        Err(e @ (Error::Instance { .. } | Error::EmptyGrid | Error::InvalidParameter(_) | Error::DimensionMismatch { .. })) => {
            return fail_usage(e)
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    if let Err(e) = emit_ew_csv(&report, csv_path) {
        eprintln!("error: cannot write {}: {e}", csv_path.display());
        return EXIT_IO;
    }
    if let Err(code) = emit_json(&report, out) {
        return code;
    }
    if report.structural_checks.iter().any(CheckLine::failed) {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Run {
            instance,
            seed,
            out,
            replay,
        } => cmd_run(&instance, seed, out.as_deref(), replay.as_deref()),
        Command::Ew {
            instance,
            problem,
            csv,
            seed,
            out,
        } => cmd_ew(&instance, &problem, &csv, seed, out.as_deref()),
    }
}
