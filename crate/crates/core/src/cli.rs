//! Command-line front end and the JSON/CSV formats it reads and writes.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 solver or check failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::bring::StrategyChoice;
use crate::closedform::{solve_quintic_with, RootReport, SolveOptions};
use crate::error::{Error, Stage};
use crate::mpfield::{format_complex, format_float, parse_complex, AppComplex, PrecisionCtx};
use crate::oracle::{aberth_solve, match_rootsets};
use crate::tschirnhaus::MonicQuintic;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

pub const DEFAULT_DIGITS: u32 = 200;
pub const CSV_HEADER: &str = "seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status";
/// Coefficient magnitude bound for benchmark quintics.
pub const BENCH_BOUND: f64 = 1e3;

#[derive(Parser, Debug)]
#[command(name = "quintic", version, about = "Closed-form roots of x^5 + m x^4 + n x^3 + p x^2 + q x + r")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one quintic.
    Solve(SolveArgs),
    /// Recheck a JSON report written by `solve --json`.
    Verify(VerifyArgs),
    /// Closed form against the oracle on seeded random quintics, as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, allow_hyphen_values = true)]
    pub n: String,
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, env = "QUINTIC_DIGITS", default_value_t = DEFAULT_DIGITS)]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Fallback::None)]
    pub fallback: Fallback,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Same as `--format json`.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub report: PathBuf,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Comma-separated list.
    #[arg(long, env = "QUINTIC_DIGITS", value_delimiter = ',', default_value = "50")]
    pub digits: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    /// Worker threads; 0 picks the machine's parallelism.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Series,
    Ode,
}

impl From<StrategyArg> for StrategyChoice {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => StrategyChoice::Auto,
            StrategyArg::Series => StrategyChoice::Series,
            StrategyArg::Ode => StrategyChoice::Ode,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fallback {
    None,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct SolveRequest {
    /// m, n, p, q, r as complex literals.
    pub coeffs: [String; 5],
    pub digits: u32,
    pub strategy: StrategyChoice,
    pub fallback: Fallback,
    pub seed: u64,
    pub format: OutputFormat,
}

impl From<SolveArgs> for SolveRequest {
    fn from(a: SolveArgs) -> Self {
        SolveRequest {
            coeffs: [a.m, a.n, a.p, a.q, a.r],
            digits: a.digits,
            strategy: a.strategy.into(),
            fallback: a.fallback,
            seed: a.seed,
            format: if a.json { OutputFormat::Json } else { a.format },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexText {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub alpha: Option<String>,
    pub xi: Option<String>,
    pub eta: Option<String>,
    pub d: Option<String>,
    #[serde(rename = "A")]
    pub big_a: Option<String>,
    #[serde(rename = "B")]
    pub big_b: Option<String>,
    pub s: Option<String>,
    pub strategy: String,
    pub shift: Option<String>,
    /// Roots were divided by 2^dilation before the reduction; the values
    /// above describe the rescaled quintic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dilation: Option<i32>,
    pub precision_used: u32,
    pub candidate_residuals: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub m: String,
    pub n: String,
    pub p: String,
    pub q: String,
    pub r: String,
    pub digits: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FallbackNote {
    pub method: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub roots: Vec<ComplexText>,
    pub residuals: Vec<String>,
    pub diagnostics: Diagnostics,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback: Option<FallbackNote>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureText {
    pub stage: Option<String>,
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureReport {
    pub error: FailureText,
    pub input: InputEcho,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Solve(a) => cmd_solve(&a.into(), out, err),
        Command::Verify(a) => cmd_verify(&a.report, out, err),
        Command::Bench(a) => cmd_bench(&a, out, err),
    }
}

fn complex_text(z: &AppComplex, digits: usize) -> ComplexText {
    ComplexText {
        re: format_float(&z.re, digits),
        im: format_float(&z.im, digits),
    }
}

fn echo(req: &SolveRequest) -> InputEcho {
    let [m, n, p, q, r] = req.coeffs.clone();
    InputEcho {
        m,
        n,
        p,
        q,
        r,
        digits: req.digits,
        seed: req.seed,
    }
}

fn parse_quintic(texts: [&str; 5], ctx: &PrecisionCtx) -> std::result::Result<MonicQuintic, String> {
    let mut vals = Vec::with_capacity(5);
    for (name, text) in ["m", "n", "p", "q", "r"].iter().zip(texts) {
        match parse_complex(text, ctx) {
            Ok(v) => vals.push(v),
            Err(e) => return Err(format!("invalid value for --{name} ({text:?}): {e}")),
        }
    }
    let [m, n, p, q, r]: [AppComplex; 5] = vals.try_into().expect("five coefficients");
    Ok(MonicQuintic::new(m, n, p, q, r))
}

/// Report for a successful closed-form solve.
pub fn report_from(req: &SolveRequest, rep: &RootReport) -> Report {
    let digits = req.digits as usize;
    let p = &rep.reduction.params;
    let c = |z: &AppComplex| Some(format_complex(z, digits));
    Report {
        roots: rep.roots.iter().map(|z| complex_text(z, digits)).collect(),
        residuals: rep.residuals.iter().map(|r| format_float(r, 6)).collect(),
        diagnostics: Diagnostics {
            alpha: c(&p.alpha),
            xi: c(&p.xi),
            eta: c(&p.eta),
            d: c(&p.d),
            big_a: c(&rep.reduction.big_a),
            big_b: c(&rep.reduction.big_b),
            s: c(&rep.reduction.s),
            strategy: rep.bring.strategy.as_str().to_string(),
            shift: c(&rep.shift_applied),
            dilation: Some(rep.reduction.dilation).filter(|&e| e != 0),
            precision_used: rep.precision_used,
            candidate_residuals: rep.candidate_residuals.iter().map(|r| format_float(r, 6)).collect(),
        },
        input: echo(req),
        fallback: None,
    }
}

fn failure_from(req: &SolveRequest, e: &Error) -> FailureReport {
    let kind = format!("{:?}", e.root_cause());
    let kind = kind.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string();
    FailureReport {
        error: FailureText {
            stage: e.stage().map(|s| s.to_string()),
            kind,
            message: e.to_string(),
        },
        input: echo(req),
    }
}

fn oracle_report(req: &SolveRequest, f: &MonicQuintic, ctx: &PrecisionCtx, reason: String) -> crate::Result<Report> {
    let poly = f.poly(ctx);
    let roots = aberth_solve(&poly, ctx).map_err(|e| e.at(Stage::Oracle))?;
    let digits = req.digits as usize;
    Ok(Report {
        roots: roots.iter().map(|z| complex_text(z, digits)).collect(),
        residuals: roots.iter().map(|z| format_float(&f.eval(z, ctx).abs(), 6)).collect(),
        diagnostics: Diagnostics {
            alpha: None,
            xi: None,
            eta: None,
            d: None,
            big_a: None,
            big_b: None,
            s: None,
            strategy: "oracle".to_string(),
            shift: None,
            dilation: None,
            precision_used: ctx.digits,
            candidate_residuals: Vec::new(),
        },
        input: echo(req),
        fallback: Some(FallbackNote {
            method: "aberth".to_string(),
            reason,
        }),
    })
}

fn write_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    let keep = (report.input.digits as usize).saturating_sub(15).max(5);
    let trim = |s: &str| -> String {
        let ctx = PrecisionCtx::new(report.input.digits).expect("digits already validated");
        match crate::mpfield::parse_float(s, &ctx) {
            Ok(v) => format_float(&v, keep),
            Err(_) => s.to_string(),
        }
    };
    for (i, z) in report.roots.iter().enumerate() {
        let re = trim(&z.re);
        let im = trim(&z.im);
        let sign = if im.starts_with('-') { "" } else { "+" };
        writeln!(out, "x{} = {re}{sign}{im}i", i + 1)?;
    }
    let d = &report.diagnostics;
    writeln!(out, "max residual: {}", report.residuals.iter().max_by(|a, b| order_decimal(a, b)).map(String::as_str).unwrap_or("-"))?;
    writeln!(out, "strategy: {}", d.strategy)?;
    if let Some(shift) = &d.shift {
        writeln!(out, "shift: {shift}")?;
    }
    if let Some(e) = d.dilation {
        writeln!(out, "dilation: 2^{e}")?;
    }
    if let Some(s) = &d.s {
        writeln!(out, "s: {}", shorten_complex(s, 30))?;
    }
    writeln!(out, "precision: {} digits", d.precision_used)?;
    if let Some(fb) = &report.fallback {
        writeln!(out, "fallback: {} ({})", fb.method, fb.reason)?;
    }
    Ok(())
}

fn order_decimal(a: &str, b: &str) -> std::cmp::Ordering {
    let fa: f64 = a.parse().unwrap_or(f64::INFINITY);
    let fb: f64 = b.parse().unwrap_or(f64::INFINITY);
    fa.partial_cmp(&fb).unwrap_or(std::cmp::Ordering::Equal)
}

fn shorten_complex(s: &str, digits: usize) -> String {
    match PrecisionCtx::new(PrecisionCtx::MIN_DIGITS.max(digits as u32)) {
        Ok(ctx) => match parse_complex(s, &ctx) {
            Ok(z) => format_complex(&z, digits),
            Err(_) => s.to_string(),
        },
        Err(_) => s.to_string(),
    }
}

pub fn cmd_solve(req: &SolveRequest, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let ctx = match PrecisionCtx::new(req.digits) {
        Ok(c) => c.seed(req.seed),
        Err(e) => {
            let _ = writeln!(err, "error: --digits: {e}");
            return EXIT_USAGE;
        }
    };
    let texts: [&str; 5] = std::array::from_fn(|i| req.coeffs[i].as_str());
    let f = match parse_quintic(texts, &ctx) {
        Ok(f) => f,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let opts = SolveOptions { strategy: req.strategy };
    let report = match solve_quintic_with(&f, &opts, &ctx) {
        Ok(rep) => report_from(req, &rep),
        Err(e) if req.fallback == Fallback::Oracle => {
            let _ = writeln!(err, "warning: closed form failed ({e}); roots come from the oracle");
            match oracle_report(req, &f, &ctx, e.to_string()) {
                Ok(r) => r,
                Err(e2) => return emit_failure(req, &e2, out, err),
            }
        }
        Err(e) => return emit_failure(req, &e, out, err),
    };
    let written = match req.format {
        OutputFormat::Json => serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out)),
        OutputFormat::Text => write_text(&report, out),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: writing output: {e}");
            EXIT_FAILURE
        }
    }
}

fn emit_failure(req: &SolveRequest, e: &Error, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = failure_from(req, e);
    match req.format {
        OutputFormat::Json => {
            let _ = serde_json::to_writer_pretty(&mut *out, &report);
            let _ = writeln!(out);
        }
        OutputFormat::Text => {
            let _ = writeln!(
                err,
                "solver failure at stage {}: {}",
                report.error.stage.as_deref().unwrap_or("unknown"),
                report.error.message
            );
        }
    }
    EXIT_FAILURE
}

/// Outcome of rechecking a report.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Residual of every root and the two Vieta identities, at the report's
/// precision, against `10^(-digits/2) max(1, |coefficients|)`.
pub fn verify_report(report: &Report) -> std::result::Result<Vec<Check>, String> {
    let ctx = PrecisionCtx::new(report.input.digits).map_err(|e| e.to_string())?;
    let inp = &report.input;
    let f = parse_quintic([&inp.m, &inp.n, &inp.p, &inp.q, &inp.r], &ctx)?;
    if report.roots.len() != 5 {
        return Err(format!("expected 5 roots, found {}", report.roots.len()));
    }
    let mut roots = Vec::with_capacity(5);
    for (i, z) in report.roots.iter().enumerate() {
        let re = crate::mpfield::parse_float(&z.re, &ctx).map_err(|e| format!("root {}: re: {e}", i + 1))?;
        let im = crate::mpfield::parse_float(&z.im, &ctx).map_err(|e| format!("root {}: im: {e}", i + 1))?;
        roots.push(AppComplex::new(re, im));
    }
    let tol = Float::with_val(ctx.prec(), f.scale(&ctx) * ctx.half_tol());
    let log10 = |x: &Float| if x.is_zero() { f64::NEG_INFINITY } else { x.clone().log10().to_f64() };
    let tol_log = log10(&tol);
    let mut checks = Vec::new();
    for (i, z) in roots.iter().enumerate() {
        let r = f.eval(z, &ctx).abs();
        checks.push(Check {
            name: format!("residual of root {}", i + 1),
            passed: r <= tol,
            detail: format!("10^{:.1} vs bound 10^{:.1}", log10(&r), tol_log),
        });
    }
    let mut sum = f.m.clone();
    let mut prod = ctx.one();
    for z in &roots {
        sum += z;
        prod = &prod * z;
    }
    let prod_err = (&prod + &f.r).abs();
    let sum_err = sum.abs();
    for (name, e) in [("sum of roots = -m", sum_err), ("product of roots = -r", prod_err)] {
        checks.push(Check {
            name: name.to_string(),
            passed: e <= tol,
            detail: format!("off by 10^{:.1} vs bound 10^{:.1}", log10(&e), tol_log),
        });
    }
    Ok(checks)
}

pub fn cmd_verify(path: &std::path::Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: reading {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let report: Report = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {} is not a solve report: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let checks = match verify_report(&report) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut failed = 0;
    for c in &checks {
        let tag = if c.passed { "ok" } else { "FAIL" };
        if !c.passed {
            failed += 1;
        }
        let _ = writeln!(out, "{tag}: {} ({})", c.name, c.detail);
    }
    if failed == 0 {
        EXIT_OK
    } else {
        let _ = writeln!(err, "{failed} check(s) failed");
        EXIT_FAILURE
    }
}

/// The benchmark quintic for `(seed, index)`; independent of the digits.
pub fn bench_quintic(seed: u64, index: usize, ctx: &PrecisionCtx) -> MonicQuintic {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    MonicQuintic::random(&mut rng, BENCH_BOUND, ctx)
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub seed: u64,
    pub index: usize,
    pub digits: u32,
    pub strategy: String,
    pub cf_ms: f64,
    pub oracle_ms: f64,
    pub match_distance: Option<Float>,
    pub status: String,
}

impl BenchRow {
    pub fn passed(&self) -> bool {
        self.status == "ok"
    }

    pub fn csv(&self) -> String {
        let dist = self.match_distance.as_ref().map_or_else(|| "-".to_string(), |d| format_float(d, 3));
        format!(
            "{},{},{},{},{:.3},{:.3},{},{}",
            self.seed, self.index, self.digits, self.strategy, self.cf_ms, self.oracle_ms, dist, self.status
        )
    }
}

pub fn bench_one(seed: u64, index: usize, digits: u32, strategy: StrategyChoice) -> BenchRow {
    let mut row = BenchRow {
        seed,
        index,
        digits,
        strategy: "-".to_string(),
        cf_ms: 0.0,
        oracle_ms: 0.0,
        match_distance: None,
        status: String::new(),
    };
    let ctx = match PrecisionCtx::new(digits) {
        Ok(c) => c.seed(seed),
        Err(_) => {
            row.status = "invalid-digits".to_string();
            return row;
        }
    };
    let f = bench_quintic(seed, index, &ctx);
    let t = Instant::now();
    let cf = solve_quintic_with(&f, &SolveOptions { strategy }, &ctx);
    row.cf_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let oracle = aberth_solve(&f.poly(&ctx), &ctx);
    row.oracle_ms = t.elapsed().as_secs_f64() * 1e3;
    match (cf, oracle) {
        (Ok(rep), Ok(oroots)) => {
            row.strategy = rep.bring.strategy.as_str().to_string();
            let m = match_rootsets(&rep.roots, &oroots);
            row.status = if m.max_distance <= ctx.half_tol() { "ok" } else { "mismatch" }.to_string();
            row.match_distance = Some(m.max_distance);
        }
        (Err(e), _) => row.status = format!("error:{}", e.stage().map_or("unknown".to_string(), |s| s.to_string())),
        (_, Err(_)) => row.status = "error:oracle".to_string(),
    }
    row
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    for &d in &args.digits {
        if let Err(e) = PrecisionCtx::new(d) {
            let _ = writeln!(err, "error: --digits: {e}");
            return EXIT_USAGE;
        }
    }
    let jobs: Vec<(usize, u32)> = (0..args.count).flat_map(|i| args.digits.iter().map(move |&d| (i, d))).collect();
    let threads = if args.threads == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        args.threads
    };
    let rows: Mutex<Vec<Option<BenchRow>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let strategy: StrategyChoice = args.strategy.into();
    std::thread::scope(|scope| {
        for _ in 0..threads.min(jobs.len()).max(1) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(index, digits)) = jobs.get(k) else { break };
                let row = bench_one(args.seed, index, digits, strategy);
                rows.lock().expect("bench rows")[k] = Some(row);
            });
        }
    });
    let rows = rows.into_inner().expect("bench rows");
    let _ = writeln!(out, "{CSV_HEADER}");
    let mut failed = 0;
    for row in rows.into_iter().flatten() {
        if !row.passed() {
            failed += 1;
        }
        let _ = writeln!(out, "{}", row.csv());
    }
    if failed > 0 {
        let _ = writeln!(err, "{failed} row(s) failed");
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("quintic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unity_text_output() {
        let (code, out, _) = run_capture(&["solve", "--m", "0", "--n", "0", "--p", "0", "--q", "0", "--r", "-1", "--digits", "40"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().filter(|l| l.starts_with('x')).count(), 5);
    }

    #[test]
    fn bad_coefficient_names_flag() {
        let (code, _, err) = run_capture(&["solve", "--m", "bogus", "--n", "0", "--p", "0", "--q", "0", "--r", "-1", "--digits", "40"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--m"), "{err}");
    }

    #[test]
    fn missing_flag_is_usage_error() {
        let (code, _, _) = run_capture(&["solve", "--m", "0"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_capture(&["solve", "--m", "0", "--n", "0", "--p", "0", "--q", "0", "--r", "1", "--digits", "5"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn bench_header_only() {
        let (code, out, _) = run_capture(&["bench", "--count", "0"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn bench_quintic_ignores_digits() {
        let a = bench_quintic(3, 4, &PrecisionCtx::new(40).unwrap());
        let b = bench_quintic(3, 4, &PrecisionCtx::new(90).unwrap());
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            assert_eq!(x.to_f64_pair(), y.to_f64_pair());
        }
    }
}
