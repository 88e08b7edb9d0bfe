//! Command-line front end: `disclab <gen|lift|compute|oracle|scan|verify>`.
//!
//! Exit codes: 0 success, 1 domain error (bad input data, guards), 2 usage
//! error, 3 a verification verdict failed.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::estimate::{parse_p, Estimate, Kind, Method};
use crate::exact_l2;
use crate::experiments::{self, GrowthScan, McSettings, ScanMode, VerdictReport, LEMMA1_DEFAULT_MAX_N};
use crate::format::{fmt17, json_num};
use crate::oracle::{self, linf_exact_small, linf_extreme_1d, linf_star_1d, mc_lp, McConfig};
use crate::points::PointSet;
use crate::sequences::{self, SequenceGen};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Largest dimension accepted from the command line.
pub const MAX_CLI_DIM: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "disclab", version, about = "L_p discrepancies and diaphony of point sets in [0,1)^d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a sequence prefix as a point CSV.
    Gen(GenArgs),
    /// Emit the lifted set {(y_k, k/N)} as a point CSV.
    Lift(LiftArgs),
    /// Exact discrepancy of a point set.
    Compute(ComputeArgs),
    /// Monte Carlo discrepancy estimate.
    Oracle(OracleArgs),
    /// Values of a sequence's prefixes against the (log N)^{d/2} rate.
    Scan(ScanArgs),
    /// Run a verification suite and write a verdict report.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SeqKind {
    Vdc,
    Halton,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct SeqParams {
    /// van der Corput base.
    #[arg(long, default_value_t = 2)]
    base: u32,
    /// Halton bases, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    bases: Vec<u32>,
}

impl SeqParams {
    fn build(&self, kind: SeqKind) -> Result<SequenceGen> {
        match kind {
            SeqKind::Vdc => SequenceGen::van_der_corput(self.base),
            SeqKind::Halton => {
                if self.bases.len() > MAX_CLI_DIM {
                    return Err(Error::InvalidArgument(format!("--bases: at most {MAX_CLI_DIM} bases")));
                }
                SequenceGen::halton(self.bases.clone())
            }
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: SeqKind,
    #[command(flatten)]
    seq: SeqParams,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exactly one of `--in` or `--seq` (with `--n` for the prefix length).
#[derive(Args, Debug)]
struct Source {
    /// Point CSV (`-` for stdin).
    #[arg(long = "in", value_name = "PATH", conflicts_with = "seq", required_unless_present = "seq")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    seq: Option<SeqKind>,
    #[command(flatten)]
    params: SeqParams,
    /// Prefix length when generating.
    #[arg(long, required_unless_present = "input")]
    n: Option<usize>,
}

impl Source {
    fn load(&self) -> Result<PointSet> {
        match (&self.input, self.seq) {
            (Some(path), _) => {
                let pts = read_points(path)?;
                if pts.dim() > MAX_CLI_DIM {
                    return Err(Error::InvalidArgument(format!("--in: dimension {} exceeds {MAX_CLI_DIM}", pts.dim())));
                }
                Ok(pts)
            }
            (None, Some(kind)) => {
                let n = self.n.ok_or_else(|| Error::InvalidArgument("--n is required with --seq".into()))?;
                sequences::prefix(&self.params.build(kind)?, n)
            }
            (None, None) => Err(Error::InvalidArgument("one of --in or --seq is required".into())),
        }
    }
}

#[derive(Args, Debug)]
struct LiftArgs {
    /// Number of terms to lift.
    #[arg(long)]
    n: usize,
    /// Sequence prefix CSV with at least N rows (`-` for stdin).
    #[arg(long = "in", value_name = "PATH", conflicts_with = "seq", required_unless_present = "seq")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    seq: Option<SeqKind>,
    #[command(flatten)]
    params: SeqParams,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    kind: String,
    #[arg(long, default_value = "2")]
    p: String,
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Diaphony only: truncate the Fourier sum at max |h_j| <= H.
    #[arg(long)]
    cutoff: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    p: String,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_enum)]
    seq: SeqKind,
    #[command(flatten)]
    params: SeqParams,
    #[arg(long)]
    kind: String,
    #[arg(long, default_value = "2")]
    p: String,
    /// `a..b:geometric` (doubling), `a..b` (every N) or a comma list.
    #[arg(long)]
    ns: String,
    /// Report the running maximum over all prefixes up to N.
    #[arg(long)]
    envelope: bool,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Also write reference curves (log N)^{d/2}, log N, sqrt(log N).
    #[arg(long, value_name = "PATH")]
    plot_data: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Inequalities,
    Lemma1,
    VdcConstant,
    Growth,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    seed: u64,
    /// inequalities: dimensions to test.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    dims: Vec<usize>,
    /// inequalities: trials per dimension (one value, or one per --dims entry).
    #[arg(long, value_delimiter = ',', default_value = "1000,100")]
    trials: Vec<usize>,
    /// inequalities: points per set.
    #[arg(long, default_value_t = 32)]
    points: usize,
    /// lemma1: sequence.
    #[arg(long, value_enum, default_value = "vdc")]
    seq: SeqKind,
    #[command(flatten)]
    params: SeqParams,
    /// lemma1: largest N.
    #[arg(long, default_value_t = 256)]
    n: usize,
    /// lemma1: norm exponent; p != 2 switches to the Monte Carlo variant.
    #[arg(long, default_value = "2")]
    p: String,
    /// lemma1 with p != 2: samples per estimate.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// lemma1: allow N above the default cap.
    #[arg(long)]
    allow_large: bool,
    /// vdc-constant: largest N.
    #[arg(long, default_value_t = 1 << 14)]
    max_n: usize,
    /// vdc-constant: bracket on the sup ratio.
    #[arg(long, default_value_t = 0.21)]
    lower: f64,
    #[arg(long, default_value_t = 0.2405)]
    upper: f64,
    /// growth: N schedule.
    #[arg(long, default_value = "64..65536:geometric")]
    ns: String,
}

/// Parses and runs one command line, writing results to `stdout` (unless
/// `--out` is given) and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen(a) => {
            let pts = sequences::prefix(&a.seq.build(a.kind)?, a.n)?;
            emit(a.out.as_deref(), stdout, |w| pts.write_csv(w))?;
        }
        Command::Lift(a) => {
            let pts = match (&a.input, a.seq) {
                (Some(path), _) => sequences::lift_points(&read_points(path)?, a.n)?,
                (None, Some(kind)) => sequences::lift(&a.params.build(kind)?, a.n)?,
                (None, None) => return Err(Error::InvalidArgument("one of --in or --seq is required".into())),
            };
            emit(a.out.as_deref(), stdout, |w| pts.write_csv(w))?;
        }
        Command::Compute(a) => {
            let kind = parse_kind(&a.kind)?;
            let p = parse_p(&a.p).map_err(|e| flag_err("--p", e))?;
            let pts = a.source.load()?;
            let (est, extra) = compute(&pts, kind, p, a.cutoff)?;
            let text = render_estimate(&est, &extra, a.format);
            emit(a.out.as_deref(), stdout, |w| w.write_all(text.as_bytes()))?;
        }
        Command::Oracle(a) => {
            let kind = parse_kind(&a.kind)?;
            let p = parse_p(&a.p).map_err(|e| flag_err("--p", e))?;
            let cfg = McConfig::new(kind, p, a.samples, a.seed).map_err(|e| flag_err("oracle", e))?;
            let pts = a.source.load()?;
            let est = mc_lp(&pts, &cfg)?;
            let text = render_estimate(&est, &[], a.format);
            emit(a.out.as_deref(), stdout, |w| w.write_all(text.as_bytes()))?;
        }
        Command::Scan(a) => {
            let kind = parse_kind(&a.kind)?;
            let p = parse_p(&a.p).map_err(|e| flag_err("--p", e))?;
            let ns = parse_ns(&a.ns)?;
            let gen = a.params.build(a.seq)?;
            let mode = if a.envelope { ScanMode::Envelope } else { ScanMode::Pointwise };
            let scan = if kind == Kind::Diaphony {
                if p != 2.0 {
                    return Err(Error::InvalidArgument("--p: the diaphony needs p = 2".into()));
                }
                experiments::diaphony_scan(&gen, &ns, mode)?
            } else {
                let mc = McSettings { samples: a.samples, seed: a.seed };
                experiments::growth_scan(&gen, kind, p, &ns, mode, mc)?
            };
            let text = match a.format {
                Format::Csv => scan_csv(&scan),
                Format::Json => pretty(&scan_json(&scan)),
            };
            emit(a.out.as_deref(), stdout, |w| w.write_all(text.as_bytes()))?;
            if let Some(path) = &a.plot_data {
                let plot = plot_csv(&ns, scan.d);
                write_file(path, plot.as_bytes())?;
            }
        }
        Command::Verify(a) => {
            let report = verify(&a)?;
            let text = pretty(&report.to_json());
            emit(a.out.as_deref(), stdout, |w| w.write_all(text.as_bytes()))?;
            let verdict = if report.pass() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                stderr,
                "{}: {verdict} ({} cases, {} failed)",
                report.claim,
                report.cases.len(),
                report.failures()
            );
            if !report.pass() {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}

fn flag_err(flag: &str, e: Error) -> Error {
    match e {
        Error::InvalidArgument(m) => Error::InvalidArgument(format!("{flag}: {m}")),
        other => other,
    }
}

fn parse_kind(s: &str) -> Result<Kind> {
    s.parse::<Kind>().map_err(|e| flag_err("--kind", e))
}

/// Exact evaluation: closed forms at `p = 2`, suprema at `p = ∞`, piecewise
/// integration for one-dimensional star and extreme at other `p`.
fn compute(pts: &PointSet, kind: Kind, p: f64, cutoff: Option<u64>) -> Result<(Estimate, Vec<(&'static str, Value)>)> {
    let (n, d) = (pts.len(), pts.dim());
    if let Some(h) = cutoff {
        if kind != Kind::Diaphony || p != 2.0 {
            return Err(Error::InvalidArgument("--cutoff applies to --kind diaphony --p 2 only".into()));
        }
        let t = exact_l2::diaphony_truncated(pts, h)?;
        let est = Estimate::exact(kind, p, t.value(), Method::GridEnum, n, d);
        return Ok((est, vec![("cutoff", Value::from(h)), ("tail_bound", json_num(t.tail_bound))]));
    }
    if kind == Kind::Diaphony && p != 2.0 {
        return Err(Error::InvalidArgument("--p: the diaphony is defined for p = 2 only".into()));
    }
    let est = if p == 2.0 {
        exact_l2::evaluate(pts, kind)?
    } else if p.is_infinite() {
        pts.require_nonempty()?;
        let v = match (kind, d) {
            (Kind::Star, 1) => linf_star_1d(pts)?,
            (Kind::Extreme, 1) => linf_extreme_1d(pts)?,
            (Kind::Star | Kind::Extreme, _) => linf_exact_small(pts, kind)?,
            _ => return Err(Error::InvalidArgument(format!("--kind: p = inf supports star|extreme, not {kind}"))),
        };
        Estimate::exact(kind, p, v, Method::GridEnum, n, d)
    } else if d == 1 && matches!(kind, Kind::Star | Kind::Extreme) {
        oracle::exact_lp_1d_estimate(pts, kind, p)?
    } else {
        return Err(Error::InvalidArgument(format!(
            "--p: no exact method for {kind} with p = {} in d = {d}; use `disclab oracle`",
            fmt17(p)
        )));
    };
    Ok((est, Vec::new()))
}

/// Flat JSON object (or one-row CSV) for an estimate.
pub fn estimate_fields(est: &Estimate) -> Vec<(&'static str, Value)> {
    let mut f = vec![
        ("kind", Value::from(est.kind.as_str())),
        ("p", json_num(est.p)),
        ("method", Value::from(est.method.as_str())),
        ("value", json_num(est.value)),
    ];
    if let Some(s) = &est.sampling {
        f.push(("stderr", json_num(s.stderr)));
        f.push(("samples", Value::from(s.samples)));
        f.push(("seed", Value::from(s.seed)));
        f.push(("rng", Value::from(s.rng)));
    }
    f.push(("n", Value::from(est.n)));
    f.push(("d", Value::from(est.d)));
    f
}

fn render_estimate(est: &Estimate, extra: &[(&'static str, Value)], format: Format) -> String {
    let mut fields = estimate_fields(est);
    fields.extend(extra.iter().cloned());
    match format {
        Format::Json => {
            let map: Map<String, Value> = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            format!("{}\n", Value::Object(map))
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let row: Vec<String> = fields
                .iter()
                .map(|(_, v)| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    }
}

fn scan_csv(scan: &GrowthScan) -> String {
    let mut s = String::from("N,value,rate,ratio\n");
    for r in &scan.rows {
        s.push_str(&format!("{},{},{},{}\n", r.n, fmt17(r.value), fmt17(r.rate), fmt17(r.ratio)));
    }
    s
}

fn scan_json(scan: &GrowthScan) -> Value {
    let rows: Vec<Value> = scan
        .rows
        .iter()
        .zip(scan.running_max().iter().zip(scan.running_min()))
        .map(|(r, (mx, mn))| {
            serde_json::json!({
                "n": r.n,
                "value": json_num(r.value),
                "rate": json_num(r.rate),
                "ratio": json_num(r.ratio),
                "running_max": json_num(*mx),
                "running_min": json_num(mn),
            })
        })
        .collect();
    let (argmax, max) = scan.max_ratio().unwrap_or((0, f64::NAN));
    let (argmin, min) = scan.min_ratio().unwrap_or((0, f64::NAN));
    serde_json::json!({
        "sequence": scan.label,
        "kind": scan.kind.as_str(),
        "p": json_num(scan.p),
        "d": scan.d,
        "mode": match scan.mode { ScanMode::Pointwise => "pointwise", ScanMode::Envelope => "envelope" },
        "max_ratio": json_num(max),
        "argmax_n": argmax,
        "min_ratio": json_num(min),
        "argmin_n": argmin,
        "rows": rows,
    })
}

fn plot_csv(ns: &[usize], d: usize) -> String {
    let mut s = String::from("N,log_n_pow_half_d,log_n,sqrt_log_n\n");
    for &n in ns {
        let l = (n as f64).ln();
        s.push_str(&format!("{n},{},{},{}\n", fmt17(l.powf(d as f64 / 2.0)), fmt17(l), fmt17(l.sqrt())));
    }
    s
}

/// `a..b:geometric` doubles from `a` while `<= b`; `a..b` lists every
/// integer; otherwise a comma-separated list.
pub fn parse_ns(spec: &str) -> Result<Vec<usize>> {
    let bad = |m: &str| Error::InvalidArgument(format!("--ns {spec:?}: {m}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(&format!("cannot parse {t:?}")));
    let ns = if let Some((range, mode)) = spec.split_once(':').or_else(|| spec.contains("..").then_some((spec, "all")))
    {
        let (a, b) = range.split_once("..").ok_or_else(|| bad("expected a..b"))?;
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad("empty range"));
        }
        match mode {
            "geometric" => {
                if a == 0 {
                    return Err(bad("geometric range must start at N >= 1"));
                }
                std::iter::successors(Some(a), |&n| n.checked_mul(2)).take_while(|&n| n <= b).collect()
            }
            "all" | "linear" => (a..=b).collect(),
            m => return Err(bad(&format!("unknown spacing {m:?} (geometric|linear)"))),
        }
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    if ns.is_empty() {
        return Err(bad("no values"));
    }
    if ns.iter().any(|&n| n < 2) {
        return Err(bad("every N must be at least 2"));
    }
    Ok(ns)
}

fn verify(a: &VerifyArgs) -> Result<VerdictReport> {
    match a.suite {
        Suite::Inequalities => {
            if a.trials.len() != 1 && a.trials.len() != a.dims.len() {
                return Err(Error::InvalidArgument("--trials: give one value or one per --dims entry".into()));
            }
            let mut report = VerdictReport::new("inequalities");
            for (i, &d) in a.dims.iter().enumerate() {
                if d > MAX_CLI_DIM {
                    return Err(Error::InvalidArgument(format!("--dims: at most {MAX_CLI_DIM}")));
                }
                let trials = if a.trials.len() == 1 { a.trials[0] } else { a.trials[i] };
                report.extend(experiments::inequality_suite(trials, &[d], a.points, a.seed)?);
            }
            Ok(report)
        }
        Suite::Lemma1 => {
            let gen = a.params.build(a.seq)?;
            let p = parse_p(&a.p).map_err(|e| flag_err("--p", e))?;
            if p == 2.0 {
                if a.n > LEMMA1_DEFAULT_MAX_N && !a.allow_large {
                    return Err(Error::InvalidArgument(format!(
                        "--n: {} exceeds {LEMMA1_DEFAULT_MAX_N}; add --allow-large",
                        a.n
                    )));
                }
                experiments::lemma1_verify(&gen, a.n, a.allow_large)
            } else {
                experiments::lemma1_verify_mc(&gen, a.n, p, a.samples, a.seed).map_err(|e| flag_err("--p", e))
            }
        }
        Suite::VdcConstant => Ok(experiments::vdc_star_constant(a.max_n)?.verdict(a.lower, a.upper)),
        Suite::Growth => experiments::growth_suite(&parse_ns(&a.ns)?),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn read_points(path: &Path) -> Result<PointSet> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        return PointSet::read_csv(&buf[..]);
    }
    let f = File::open(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    PointSet::read_csv(BufReader::new(f))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut f = File::create(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    f.write_all(bytes)?;
    Ok(())
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            f(stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Caps the global rayon pool from `DISCLAB_THREADS` (unset or 0: automatic).
pub fn init_threads_from_env() -> Result<()> {
    let Ok(v) = std::env::var("DISCLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("DISCLAB_THREADS={v:?} is not a non-negative integer")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidArgument(format!("DISCLAB_THREADS: {e}")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["disclab"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ns_specs() {
        assert_eq!(parse_ns("16..100:geometric").unwrap(), vec![16, 32, 64]);
        assert_eq!(parse_ns("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_ns("3,9,27").unwrap(), vec![3, 9, 27]);
        assert!(parse_ns("1..4").is_err());
        assert!(parse_ns("8..4:geometric").is_err());
        assert!(parse_ns("2..8:cubic").is_err());
        assert!(parse_ns("x").is_err());
    }

    #[test]
    fn gen_vdc() {
        let (code, out, _) = run_str(&["gen", "--kind", "vdc", "--base", "2", "--n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "# d=1 n=4\n0\n0.5\n0.25\n0.75\n");
    }

    #[test]
    fn compute_from_sequence() {
        let (code, out, _) = run_str(&["compute", "--kind", "extreme", "--p", "2", "--seq", "vdc", "--n", "1"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"kind\":\"extreme\",\"p\":2.0000000000000000,\"method\":\"exact-closed-form\",\"value\":0.28867513459481287,\"n\":1,\"d\":1}\n"
        );
    }

    #[test]
    fn usage_and_domain_codes() {
        assert_eq!(run_str(&["compute", "--kind", "star"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["compute", "--kind", "boxy", "--seq", "vdc", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["compute", "--kind", "star", "--in", "/nonexistent/points.csv"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("/nonexistent/points.csv"));
        assert_eq!(
            run_str(&["oracle", "--kind", "star", "--p", "2", "--samples", "5", "--seq", "vdc", "--n", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, err) = run_str(&["verify", "--suite", "lemma1", "--n", "16"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("\"claim\": \"lemma1\""));
        let (code, _, _) = run_str(&["verify", "--suite", "vdc-constant", "--max-n", "64", "--upper", "0.1"]);
        assert_eq!(code, EXIT_VERIFY);
    }
}
