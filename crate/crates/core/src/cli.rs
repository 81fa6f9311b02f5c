//! Command-line surface of the `turan` binary.
//!
//! Exit status: 0 on success, 2 when a `verify` run finds violations, 1 on
//! usage or domain errors. Floats are printed in their shortest round-trip
//! form, so output for a given configuration is reproducible byte for byte
//! (with `--deterministic` for reports carrying a wall time).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::certificates::steinig_certify;
use crate::chebyshev::{
    cheb_t, cheb_u, eval_lambda, integral_tu_weighted, integral_u_weighted, QuadratureConfig,
    QuadratureScheme,
};
use crate::kernel::{CoeffVector, TuranParams};
use crate::sine_sums::{
    carslaw_sum, eval_s, eval_s_star, eval_theta, eval_theta_star, fejer_jackson_sum, fejer_phi,
    fejer_phi_closed,
};
use crate::verifier::{
    crossing_point, find_spec, margin_rows, registry, scan_inequality, spec_ids, sweep_a,
    write_margin_csv, ScanGrid, ScanReport, SweepTarget,
};

/// Environment variable capping scan parallelism.
pub const THREADS_ENV: &str = "TURAN_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Compute(#[from] crate::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("malformed coefficients: {0}")]
    Coefficients(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// How a successful command ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ViolationsFound,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::ViolationsFound => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "turan",
    version,
    about = "Turán-type sine sums: evaluation, certificates and inequality verification"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one sum or polynomial at a point.
    Eval(EvalArgs),
    /// Compute the γ certificate of a coefficient vector.
    Certify(CertifyArgs),
    /// Scan registered inequalities on a grid and write JSON reports.
    Verify(VerifyArgs),
    /// Locate the sharpness boundary in a by counterexample search.
    #[command(name = "sweep-a")]
    SweepA(SweepArgs),
    /// Weighted Chebyshev integral by closed form and by quadrature.
    #[command(name = "cheb-integral")]
    ChebIntegral(ChebIntegralArgs),
    /// Crossing point of the two lower bounds for S_{n,a}.
    Crossing,
    /// Dump per-point margins of one inequality.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumKind {
    #[value(name = "S")]
    S,
    #[value(name = "S-star")]
    SStar,
    #[value(name = "Theta")]
    Theta,
    #[value(name = "Theta-star")]
    ThetaStar,
    Phi,
    PhiClosed,
    FejerJackson,
    Carslaw,
    Lambda,
    ChebT,
    ChebU,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub sum: SumKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub y: Option<f64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CoeffSource {
    /// JSON array of numbers, c_1 first.
    #[arg(long)]
    pub coeffs: Option<String>,
    /// File holding the JSON array.
    #[arg(long)]
    pub coeffs_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: CoeffSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args, Clone)]
pub struct GridArgs {
    /// Spec id from the registry, or "all" (verify only).
    #[arg(long)]
    pub spec: String,
    /// Scan n = n_min..=n_max instead of the default range.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub n_min: usize,
    /// Values of a (repeatable); defaults to the spec's grid.
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a_values: Vec<f64>,
    #[arg(long)]
    pub x_steps: Option<usize>,
    #[arg(long)]
    pub y_steps: Option<usize>,
    /// Allow a below the hypothesis of the statement.
    #[arg(long)]
    pub probe: bool,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Write wall_time_s as 0 so reports are reproducible byte for byte.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// thm3.4 (S_{n,a} > 0) or thm3.10 (Theta_{n,a} > 0).
    #[arg(long)]
    pub spec: String,
    #[arg(long, allow_negative_numbers = true)]
    pub a_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub a_max: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntegralKind {
    /// int_x^1 U_{2n}(t)/sqrt(1-t^2) dt
    U,
    /// int_x^1 T_{n+1}(t) U_n(t)/sqrt(1-t^2) dt
    Tu,
}

#[derive(Debug, Args)]
pub struct ChebIntegralArgs {
    #[arg(long, value_enum)]
    pub kind: IntegralKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Gauss–Legendre nodes per panel.
    #[arg(long, default_value_t = QuadratureConfig::DEFAULT_NODES)]
    pub nodes: usize,
}

fn params(n: usize, a: f64) -> Result<TuranParams, CliError> {
    Ok(TuranParams::new(n, a)?)
}

fn need_y(y: Option<f64>, sum: SumKind) -> Result<f64, CliError> {
    y.ok_or_else(|| CliError::Usage(format!("--y is required for {sum:?}")))
}

fn eval_value(args: &EvalArgs) -> Result<f64, CliError> {
    let (n, a, x) = (args.n, args.a, args.x);
    Ok(match args.sum {
        SumKind::S => eval_s(params(n, a)?, x),
        SumKind::SStar => eval_s_star(params(n, a)?, x),
        SumKind::Theta => eval_theta(params(n, a)?, x, need_y(args.y, args.sum)?),
        SumKind::ThetaStar => eval_theta_star(params(n, a)?, x, need_y(args.y, args.sum)?),
        SumKind::Phi => {
            if n == 0 {
                return Err(CliError::Usage("phi needs n >= 1".into()));
            }
            fejer_phi(n, x)
        }
        SumKind::PhiClosed => {
            if n == 0 {
                return Err(CliError::Usage("phi needs n >= 1".into()));
            }
            fejer_phi_closed(n, x)?
        }
        SumKind::FejerJackson => {
            if n == 0 {
                return Err(CliError::Usage("the sum needs n >= 1".into()));
            }
            fejer_jackson_sum(n, x)
        }
        SumKind::Carslaw => carslaw_sum(n, x),
        SumKind::Lambda => eval_lambda(n, a, x)?,
        SumKind::ChebT => cheb_t(n, x),
        SumKind::ChebU => cheb_u(n, x),
    })
}

fn parse_coeffs(source: &CoeffSource) -> Result<CoeffVector, CliError> {
    let text = match (&source.coeffs, &source.coeffs_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => return Err(CliError::Usage("pass --coeffs or --coeffs-file".into())),
    };
    let values: Vec<f64> =
        serde_json::from_str(&text).map_err(|e| CliError::Coefficients(e.to_string()))?;
    CoeffVector::new(values).map_err(|e| CliError::Coefficients(e.to_string()))
}

fn build_grid(spec_default: ScanGrid, args: &GridArgs) -> ScanGrid {
    let mut grid = spec_default;
    if let Some(n_max) = args.n_max {
        grid.n_values = (args.n_min..=n_max).collect();
    } else if args.n_min > 0 {
        grid.n_values.retain(|&n| n >= args.n_min);
    }
    if !args.a_values.is_empty() {
        grid.a_values = args.a_values.clone();
    }
    if let Some(s) = args.x_steps {
        grid.x_steps = s;
    }
    if let Some(s) = args.y_steps {
        grid.y_steps = Some(s);
    }
    grid.sharpness_probe = args.probe;
    grid
}

fn unknown_spec(id: &str) -> CliError {
    CliError::Usage(format!(
        "unknown spec id {id:?}; known: {}",
        spec_ids().join(", ")
    ))
}

fn write_json<T: Serialize>(
    value: &T,
    path: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let k: usize = v.trim().parse().ok().filter(|&k| k > 0).ok_or_else(|| {
            CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))
        })?;
        builder = builder.num_threads(k);
    }
    builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let specs = if args.grid.spec == "all" {
        registry()
    } else {
        vec![find_spec(&args.grid.spec).ok_or_else(|| unknown_spec(&args.grid.spec))?]
    };
    let pool = thread_pool()?;
    let reports = pool.install(|| {
        specs
            .iter()
            .map(|spec| {
                let grid = build_grid(spec.default_grid(), &args.grid);
                scan_inequality(spec, &grid).map(|r| {
                    if args.deterministic {
                        r.without_timing()
                    } else {
                        r
                    }
                })
            })
            .collect::<crate::Result<Vec<ScanReport>>>()
    })?;
    let failed = reports.iter().any(|r| !r.passed());
    if reports.len() == 1 {
        write_json(&reports[0], &args.grid.out, out)?;
    } else {
        write_json(&reports, &args.grid.out, out)?;
    }
    Ok(if failed {
        Outcome::ViolationsFound
    } else {
        Outcome::Success
    })
}

fn run_report(args: &ReportArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let spec = find_spec(&args.grid.spec).ok_or_else(|| unknown_spec(&args.grid.spec))?;
    let grid = build_grid(spec.default_grid(), &args.grid);
    let rows = thread_pool()?.install(|| margin_rows(&spec, &grid))?;
    match args.format {
        Format::Json => write_json(&rows, &args.grid.out, out)?,
        Format::Csv => match &args.grid.out {
            Some(path) => write_margin_csv(&rows, BufWriter::new(File::create(path)?))?,
            None => write_margin_csv(&rows, out)?,
        },
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct IntegralOutput {
    kind: &'static str,
    n: usize,
    x: f64,
    closed_form: f64,
    quadrature: f64,
    abs_diff: f64,
    nodes_per_panel: usize,
}

fn run_cheb_integral(args: &ChebIntegralArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let quad = QuadratureConfig::new(args.nodes, QuadratureScheme::GaussLegendreOnTheta)?;
    let closed = QuadratureConfig::closed_form();
    let (kind, c, q) = match args.kind {
        IntegralKind::U => (
            "U",
            integral_u_weighted(args.n, args.x, closed)?,
            integral_u_weighted(args.n, args.x, quad)?,
        ),
        IntegralKind::Tu => (
            "TU",
            integral_tu_weighted(args.n, args.x, closed)?,
            integral_tu_weighted(args.n, args.x, quad)?,
        ),
    };
    let report = IntegralOutput {
        kind,
        n: args.n,
        x: args.x,
        closed_form: c,
        quadrature: q,
        abs_diff: (c - q).abs(),
        nodes_per_panel: args.nodes,
    };
    write_json(&report, &None, out)?;
    Ok(Outcome::Success)
}

/// Executes one parsed command, writing results to `out`.
pub fn run(config: &CommandConfig, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &config.command {
        Command::Eval(args) => {
            writeln!(out, "{}", eval_value(args)?)?;
            Ok(Outcome::Success)
        }
        Command::Certify(args) => {
            let cert = steinig_certify(&parse_coeffs(&args.source)?);
            write_json(&cert, &None, out)?;
            Ok(Outcome::Success)
        }
        Command::Verify(args) => run_verify(args, out),
        Command::SweepA(args) => {
            let target = match args.spec.as_str() {
                "thm3.4" => SweepTarget::S,
                "thm3.10" => SweepTarget::Theta,
                other => {
                    return Err(CliError::Usage(format!(
                        "sweep-a supports thm3.4 and thm3.10, got {other:?}"
                    )))
                }
            };
            let report = sweep_a(target, args.a_min, args.a_max, args.steps)?;
            write_json(&report, &None, out)?;
            Ok(Outcome::Success)
        }
        Command::ChebIntegral(args) => run_cheb_integral(args, out),
        Command::Crossing => {
            writeln!(out, "{}", crossing_point()?)?;
            Ok(Outcome::Success)
        }
        Command::Report(args) => run_report(args, out),
    }
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(&config, &mut lock) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<(Outcome, String), CliError> {
        let config =
            CommandConfig::try_parse_from(std::iter::once("turan").chain(args.iter().copied()))
                .map_err(|e| CliError::Usage(e.to_string()))?;
        let mut buf = Vec::new();
        let outcome = run(&config, &mut buf)?;
        Ok((outcome, String::from_utf8(buf).unwrap()))
    }

    #[test]
    fn eval_prints_shortest_round_trip() {
        let (o, text) = run_args(&["eval", "--sum", "S", "--n", "3", "--x", "2.0943951"]).unwrap();
        assert_eq!(o, Outcome::Success);
        let v: f64 = text.trim().parse().unwrap();
        assert!((v - 0.8660254).abs() < 1e-6);
        assert_eq!(text.trim(), v.to_string());
    }

    #[test]
    fn eval_needs_y_for_two_variable_sums() {
        assert!(matches!(
            run_args(&["eval", "--sum", "Theta", "--n", "3", "--x", "1"]),
            Err(CliError::Usage(_))
        ));
        let (_, text) = run_args(&[
            "eval", "--sum", "Theta", "--n", "1", "--x", "1", "--y", "-1",
        ])
        .unwrap();
        let v: f64 = text.trim().parse().unwrap();
        assert!((v + 1f64.sin().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn certify_reads_json() {
        let (_, text) = run_args(&["certify", "--coeffs", "[3,2,1]"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["gammas"], serde_json::json!([1.0, 0.0, 1.0]));
        assert_eq!(v["verdict"], "CertifiedNonnegative");
        assert!(matches!(
            run_args(&["certify", "--coeffs", "[1, oops]"]),
            Err(CliError::Coefficients(_))
        ));
        assert!(matches!(
            run_args(&["certify", "--coeffs", "[]"]),
            Err(CliError::Coefficients(_))
        ));
    }

    #[test]
    fn grid_overrides() {
        let args = GridArgs {
            spec: "thm3.1".into(),
            n_max: Some(9),
            n_min: 3,
            a_values: vec![1.25],
            x_steps: Some(63),
            y_steps: None,
            probe: false,
            out: None,
        };
        let spec = find_spec("thm3.1").unwrap();
        let g = build_grid(spec.default_grid(), &args);
        assert_eq!(g.n_values, (3..=9).collect::<Vec<_>>());
        assert_eq!(g.a_values, vec![1.25]);
        assert_eq!(g.x_steps, 63);
    }

    #[test]
    fn unknown_spec_is_a_usage_error() {
        assert!(matches!(
            run_args(&["verify", "--spec", "thm9.9"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["sweep-a", "--spec", "thm3.1", "--a-min", "0", "--a-max", "1"]),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn verify_exit_codes() {
        let (o, _) = run_args(&[
            "verify",
            "--spec",
            "thm3.1",
            "--n-max",
            "7",
            "--x-steps",
            "127",
        ])
        .unwrap();
        assert_eq!(o.exit_code(), 0);
        let (o, _) = run_args(&[
            "verify",
            "--spec",
            "thm3.4",
            "--n-max",
            "3",
            "--a",
            "0.9",
            "--probe",
            "--x-steps",
            "255",
        ])
        .unwrap();
        assert_eq!(o.exit_code(), 2);
        // below the hypothesis without --probe
        assert!(matches!(
            run_args(&["verify", "--spec", "thm3.4", "--a", "0.9"]),
            Err(CliError::Compute(crate::Error::Domain(_)))
        ));
    }
}
