//! Command-line front end.
//!
//! Subcommands: `single` (one settings pair), `sweep` (correlation vs angle),
//! `chsh` (four-setting CHSH sum), `scan` (grid search for the maximal |S|),
//! `verify` (built-in invariant suite). Angles cross the boundary in degrees
//! and are converted to radians once; everything inside runs in radians.
//!
//! Output is CSV (default) or JSON. CSV is byte-stable for a fixed
//! configuration: fixed column order, 9 significant digits, `.` decimal
//! separator, `\n` line endings. JSON reports carry the full resolved
//! configuration, so any run can be reproduced from its own output.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage error.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks;
use crate::sim::{
    estimate_chsh, pair_grid_estimates, run_experiment, ChshEstimate, CoincidenceCounts,
    CorrelationEstimate, ExperimentConfig, ModelKind,
};
use crate::model::PairSourceSpec;

const DEG: f64 = PI / 180.0;

/// Grid-point budget for `scan`.
const MAX_SCAN_POINTS: u128 = 100_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "bellphase",
    version,
    about = "Phase-rotation model of entangled photon pairs: CHSH analytics and Monte Carlo Bell tests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate or simulate one settings pair
    Single(SingleArgs),
    /// Correlation versus angle difference over a range
    Sweep(SweepArgs),
    /// CHSH sum at four settings (defaults: 0, 45, 22.5, 67.5 degrees)
    Chsh(ChshArgs),
    /// Grid scan for the settings maximizing |S|
    Scan(ScanArgs),
    /// Run the built-in invariant suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct BackendArgs {
    /// Evaluate exact closed forms instead of sampling
    #[arg(long)]
    analytic: bool,
    /// Monte Carlo model: phase | bell-det | bell-stoch
    #[arg(long, value_parser = parse_model)]
    model: Option<ModelKind>,
    /// Photon pairs per experiment
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    /// RNG seed
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Parallel RNG substreams (default: available processors)
    #[arg(long)]
    partitions: Option<u64>,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Source phase difference Δ, degrees
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    /// Common initial phase φ0, degrees (cancels out of every probability)
    #[arg(long, default_value_t = 0.0)]
    phi0: f64,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct SingleArgs {
    /// Forward-arm rotator angle φ1, degrees
    #[arg(long, default_value_t = 0.0)]
    phi1: f64,
    /// Backward-arm rotator angle φ2, degrees
    #[arg(long, default_value_t = 0.0)]
    phi2: f64,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// First angle difference, degrees
    #[arg(long, default_value_t = 0.0)]
    start: f64,
    /// Last angle difference, degrees
    #[arg(long, default_value_t = 180.0)]
    stop: f64,
    /// Grid step, degrees
    #[arg(long, default_value_t = 5.0)]
    step: f64,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ChshArgs {
    /// φ1, degrees
    #[arg(long, default_value_t = 0.0)]
    phi1: f64,
    /// φ1', degrees
    #[arg(long, default_value_t = 45.0)]
    phi1p: f64,
    /// φ2, degrees
    #[arg(long, default_value_t = 22.5)]
    phi2: f64,
    /// φ2', degrees
    #[arg(long, default_value_t = 67.5)]
    phi2p: f64,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Grid step over all four settings, degrees
    #[arg(long, default_value_t = 22.5)]
    step: f64,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    s.parse::<ModelKind>().map_err(|e| e.to_string())
}

/// Parse the process arguments, run, and return the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Entry point with explicit arguments, for embedding and tests.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Single(args) => cmd_single(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Chsh(args) => cmd_chsh(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Io(err)) => {
            eprintln!("error: {err}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

struct Backend {
    analytic: bool,
    model: ModelKind,
    trials: u64,
    seed: u64,
    partitions: u64,
}

impl BackendArgs {
    fn resolve(&self) -> Result<Backend, CliError> {
        if !self.analytic && self.model.is_none() {
            return usage("choose a backend: --analytic or --model {phase|bell-det|bell-stoch}");
        }
        Ok(Backend {
            analytic: self.analytic,
            model: self.model.unwrap_or(ModelKind::Phase),
            trials: self.trials,
            seed: self.seed,
            partitions: self.partitions.unwrap_or_else(default_partitions),
        })
    }
}

fn default_partitions() -> u64 {
    std::thread::available_parallelism().map(|n| n.get() as u64).unwrap_or(1)
}

impl Backend {
    fn backend_name(&self) -> &'static str {
        if self.analytic {
            "analytic"
        } else {
            "mc"
        }
    }

    fn config_json(&self) -> Value {
        json!({
            "backend": self.backend_name(),
            "model": self.model.name(),
            "trials": self.trials,
            "seed": self.seed,
            "partitions": self.partitions,
        })
    }

    fn experiment(&self, phi1_deg: f64, phi2_deg: f64, source: PairSourceSpec) -> ExperimentConfig {
        ExperimentConfig {
            model: self.model,
            phi1: phi1_deg * DEG,
            phi2: phi2_deg * DEG,
            source,
            trials: self.trials,
            seed: self.seed,
            partitions: self.partitions.min(self.trials.max(1)),
        }
    }
}

impl SourceArgs {
    fn to_spec(&self) -> PairSourceSpec {
        PairSourceSpec::with_phi0(self.delta * DEG, self.phi0 * DEG)
    }

    fn config_json(&self) -> Value {
        json!({ "delta_deg": self.delta, "phi0_deg": self.phi0 })
    }
}

// Fixed-width significant-digit formatting keeps CSV output byte-stable.
// Magnitudes below the library-wide 1e-12 tolerance print as plain zero.
fn fmt9(x: f64) -> String {
    if x == 0.0 || x.abs() < 5e-13 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (8 - exponent).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render_json(config: Value, results: Value, checks: Value) -> String {
    let report = json!({ "config": config, "results": results, "checks": checks });
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    text
}

fn map_sim_err(err: crate::sim::SimError) -> CliError {
    CliError::Usage(err.to_string())
}

fn counts_frequencies(counts: &CoincidenceCounts) -> [f64; 4] {
    let n = counts.total as f64;
    counts.as_array().map(|c| c as f64 / n)
}

fn cmd_single(args: SingleArgs) -> Result<i32, CliError> {
    let backend = args.backend.resolve()?;
    let source = args.source.to_spec();

    let (channels, e, std_err, counts): ([f64; 4], f64, f64, Option<CoincidenceCounts>) =
        if backend.analytic {
            let p = backend.model.analytic_channel_probabilities(
                args.phi1 * DEG,
                args.phi2 * DEG,
                &source,
            );
            let e = backend.model.analytic_correlation(args.phi1 * DEG, args.phi2 * DEG, &source);
            (p, e, 0.0, None)
        } else {
            let config = backend.experiment(args.phi1, args.phi2, source);
            let counts = run_experiment(&config).map_err(map_sim_err)?;
            let est = crate::sim::estimate_correlation(&counts).map_err(map_sim_err)?;
            (counts_frequencies(&counts), est.e_hat, est.std_err, Some(counts))
        };

    let text = match args.output.format {
        Format::Csv => {
            let mut s = String::from(
                "backend,model,phi1_deg,phi2_deg,delta_deg,phi0_deg,p_pp,p_mm,p_pm,p_mp,e,std_err,trials,seed,partitions\n",
            );
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                backend.backend_name(),
                backend.model.name(),
                fmt9(args.phi1),
                fmt9(args.phi2),
                fmt9(args.source.delta),
                fmt9(args.source.phi0),
                fmt9(channels[0]),
                fmt9(channels[1]),
                fmt9(channels[2]),
                fmt9(channels[3]),
                fmt9(e),
                fmt9(std_err),
                backend.trials,
                backend.seed,
                backend.partitions,
            ));
            s
        }
        Format::Json => {
            let mut config = backend.config_json();
            merge_json(
                &mut config,
                json!({
                    "command": "single",
                    "phi1_deg": args.phi1,
                    "phi2_deg": args.phi2,
                    "source": args.source.config_json(),
                }),
            );
            let mut results = json!({
                "channels": { "pp": channels[0], "mm": channels[1], "pm": channels[2], "mp": channels[3] },
                "e": e,
                "std_err": std_err,
            });
            if let Some(counts) = counts {
                merge_json(&mut results, json!({ "counts": counts }));
            }
            render_json(config, results, json!([]))
        }
    };
    emit(&args.output, &text)?;
    Ok(0)
}

fn sweep_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if step <= 0.0 || !step.is_finite() {
        return usage(format!("--step must be positive (got {step})"));
    }
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return usage("invalid sweep range: need finite --start <= --stop");
    }
    let mut grid = Vec::new();
    let mut k = 0u64;
    loop {
        let angle = start + k as f64 * step;
        if angle > stop + 1e-9 {
            break;
        }
        grid.push(angle);
        k += 1;
    }
    Ok(grid)
}

fn cmd_sweep(args: SweepArgs) -> Result<i32, CliError> {
    let backend = args.backend.resolve()?;
    let source = args.source.to_spec();
    let grid = sweep_grid(args.start, args.stop, args.step)?;

    struct Row {
        angle_deg: f64,
        e_analytic: f64,
        mc: Option<CorrelationEstimate>,
    }

    let mut rows = Vec::with_capacity(grid.len());
    for (k, &angle_deg) in grid.iter().enumerate() {
        let e_analytic = backend.model.analytic_correlation(angle_deg * DEG, 0.0, &source);
        let mc = if backend.analytic {
            None
        } else {
            let config = backend.experiment(angle_deg, 0.0, source);
            let counts =
                crate::sim::run_experiment_tagged(&config, k as u32).map_err(map_sim_err)?;
            Some(crate::sim::estimate_correlation(&counts).map_err(map_sim_err)?)
        };
        rows.push(Row { angle_deg, e_analytic, mc });
    }

    let text = match args.output.format {
        Format::Csv => {
            let mut s = String::new();
            if backend.analytic {
                s.push_str("angle_deg,e_analytic\n");
                for row in &rows {
                    s.push_str(&format!("{},{}\n", fmt9(row.angle_deg), fmt9(row.e_analytic)));
                }
            } else {
                s.push_str("angle_deg,e_analytic,e_hat,std_err\n");
                for row in &rows {
                    let mc = row.mc.as_ref().expect("mc row");
                    s.push_str(&format!(
                        "{},{},{},{}\n",
                        fmt9(row.angle_deg),
                        fmt9(row.e_analytic),
                        fmt9(mc.e_hat),
                        fmt9(mc.std_err),
                    ));
                }
            }
            s
        }
        Format::Json => {
            let mut config = backend.config_json();
            merge_json(
                &mut config,
                json!({
                    "command": "sweep",
                    "start_deg": args.start,
                    "stop_deg": args.stop,
                    "step_deg": args.step,
                    "source": args.source.config_json(),
                }),
            );
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut v = json!({
                        "angle_deg": row.angle_deg,
                        "e_analytic": row.e_analytic,
                    });
                    if let Some(mc) = &row.mc {
                        merge_json(&mut v, json!({ "e_hat": mc.e_hat, "std_err": mc.std_err }));
                    }
                    v
                })
                .collect();
            render_json(config, json!({ "rows": rows_json }), json!([]))
        }
    };
    emit(&args.output, &text)?;
    Ok(0)
}

fn cmd_chsh(args: ChshArgs) -> Result<i32, CliError> {
    let backend = args.backend.resolve()?;
    let source = args.source.to_spec();
    let settings =
        [(args.phi1, args.phi2), (args.phi1, args.phi2p), (args.phi1p, args.phi2), (args.phi1p, args.phi2p)];

    let (pair_es, pair_errs, s, std_err, mc): ([f64; 4], [f64; 4], f64, f64, Option<ChshEstimate>) =
        if backend.analytic {
            let es = settings
                .map(|(a, b)| backend.model.analytic_correlation(a * DEG, b * DEG, &source));
            let s = es[0] - es[1] + es[2] + es[3];
            (es, [0.0; 4], s, 0.0, None)
        } else {
            let base = backend.experiment(args.phi1, args.phi2, source);
            let est =
                estimate_chsh(&base, args.phi1p * DEG, args.phi2p * DEG).map_err(map_sim_err)?;
            let es = [0, 1, 2, 3].map(|k| est.pairs[k].estimate.e_hat);
            let errs = [0, 1, 2, 3].map(|k| est.pairs[k].estimate.std_err);
            (es, errs, est.s_hat, est.std_err, Some(est))
        };

    let text = match args.output.format {
        Format::Csv => {
            let mut out = String::from(
                "backend,model,phi1_deg,phi1p_deg,phi2_deg,phi2p_deg,delta_deg,e1,e2,e3,e4,s,std_err,trials,seed,partitions\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                backend.backend_name(),
                backend.model.name(),
                fmt9(args.phi1),
                fmt9(args.phi1p),
                fmt9(args.phi2),
                fmt9(args.phi2p),
                fmt9(args.source.delta),
                fmt9(pair_es[0]),
                fmt9(pair_es[1]),
                fmt9(pair_es[2]),
                fmt9(pair_es[3]),
                fmt9(s),
                fmt9(std_err),
                backend.trials,
                backend.seed,
                backend.partitions,
            ));
            out
        }
        Format::Json => {
            let mut config = backend.config_json();
            merge_json(
                &mut config,
                json!({
                    "command": "chsh",
                    "phi1_deg": args.phi1,
                    "phi1p_deg": args.phi1p,
                    "phi2_deg": args.phi2,
                    "phi2p_deg": args.phi2p,
                    "source": args.source.config_json(),
                }),
            );
            let pairs: Vec<Value> = settings
                .iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    let mut v = json!({
                        "phi_a_deg": a,
                        "phi_b_deg": b,
                        "e": pair_es[k],
                        "std_err": pair_errs[k],
                    });
                    if let Some(est) = &mc {
                        merge_json(&mut v, json!({ "counts": est.pairs[k].counts }));
                    }
                    v
                })
                .collect();
            let results = json!({ "pairs": pairs, "s": s, "std_err": std_err });
            render_json(config, results, json!([]))
        }
    };
    emit(&args.output, &text)?;
    Ok(0)
}

struct ScanOutcome {
    best: [f64; 4],
    max_abs_s: f64,
    std_err: f64,
}

fn scan_quadruples<E>(grid: &[f64], pair: E) -> ScanOutcome
where
    E: Fn(usize, usize) -> (f64, f64),
{
    let n = grid.len();
    let mut best = [0.0; 4];
    let mut max_abs_s = f64::NEG_INFINITY;
    let mut best_var = 0.0;
    for i1 in 0..n {
        for i1p in 0..n {
            for i2 in 0..n {
                for i2p in 0..n {
                    let (e1, v1) = pair(i1, i2);
                    let (e2, v2) = pair(i1, i2p);
                    let (e3, v3) = pair(i1p, i2);
                    let (e4, v4) = pair(i1p, i2p);
                    let s = e1 - e2 + e3 + e4;
                    if s.abs() > max_abs_s {
                        max_abs_s = s.abs();
                        best = [grid[i1], grid[i1p], grid[i2], grid[i2p]];
                        best_var = v1 + v2 + v3 + v4;
                    }
                }
            }
        }
    }
    ScanOutcome { best, max_abs_s, std_err: best_var.sqrt() }
}

fn cmd_scan(args: ScanArgs) -> Result<i32, CliError> {
    let backend = args.backend.resolve()?;
    let source = args.source.to_spec();
    if args.step <= 0.0 || !args.step.is_finite() {
        return usage(format!("--step must be positive (got {})", args.step));
    }
    let per_axis = (180.0 / args.step).ceil() as u128;
    if per_axis.pow(4) > MAX_SCAN_POINTS {
        return usage(format!(
            "scan grid of {per_axis}^4 points exceeds the {MAX_SCAN_POINTS}-point budget; increase --step"
        ));
    }
    let grid: Vec<f64> =
        (0..per_axis as u64).map(|k| k as f64 * args.step).take_while(|a| *a < 180.0).collect();

    let outcome = if backend.analytic {
        let n = grid.len();
        let mut table = vec![0.0; n * n];
        for (i, &a) in grid.iter().enumerate() {
            for (j, &b) in grid.iter().enumerate() {
                table[i * n + j] = backend.model.analytic_correlation(a * DEG, b * DEG, &source);
            }
        }
        scan_quadruples(&grid, |i, j| (table[i * n + j], 0.0))
    } else {
        let radians: Vec<f64> = grid.iter().map(|a| a * DEG).collect();
        let estimates = pair_grid_estimates(
            backend.model,
            &radians,
            &source,
            backend.trials,
            backend.seed,
            backend.partitions.min(backend.trials.max(1)),
        )
        .map_err(map_sim_err)?;
        scan_quadruples(&grid, |i, j| {
            let est = &estimates[i][j];
            (est.e_hat, est.std_err * est.std_err)
        })
    };

    let text = match args.output.format {
        Format::Csv => {
            let mut s = String::from(
                "backend,model,step_deg,best_phi1_deg,best_phi1p_deg,best_phi2_deg,best_phi2p_deg,max_abs_s,std_err\n",
            );
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                backend.backend_name(),
                backend.model.name(),
                fmt9(args.step),
                fmt9(outcome.best[0]),
                fmt9(outcome.best[1]),
                fmt9(outcome.best[2]),
                fmt9(outcome.best[3]),
                fmt9(outcome.max_abs_s),
                fmt9(outcome.std_err),
            ));
            s
        }
        Format::Json => {
            let mut config = backend.config_json();
            merge_json(
                &mut config,
                json!({
                    "command": "scan",
                    "step_deg": args.step,
                    "source": args.source.config_json(),
                }),
            );
            let results = json!({
                "best": {
                    "phi1_deg": outcome.best[0],
                    "phi1p_deg": outcome.best[1],
                    "phi2_deg": outcome.best[2],
                    "phi2p_deg": outcome.best[3],
                },
                "max_abs_s": outcome.max_abs_s,
                "std_err": outcome.std_err,
            });
            render_json(config, results, json!([]))
        }
    };
    emit(&args.output, &text)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let outcomes = checks::run_all();
    let all_passed = outcomes.iter().all(|o| o.passed);

    let text = match args.output.format {
        Format::Csv => {
            let mut s = String::from("check,passed,detail\n");
            for o in &outcomes {
                s.push_str(&format!("{},{},{}\n", o.name, o.passed, o.detail));
            }
            s
        }
        Format::Json => {
            let config = json!({ "command": "verify" });
            let results = json!({ "passed": all_passed });
            render_json(config, results, serde_json::to_value(&outcomes).expect("checks"))
        }
    };
    emit(&args.output, &text)?;
    if all_passed {
        Ok(0)
    } else {
        for o in outcomes.iter().filter(|o| !o.passed) {
            eprintln!("failed check {}: {}", o.name, o.detail);
        }
        Ok(1)
    }
}

fn merge_json(target: &mut Value, extra: Value) {
    if let (Value::Object(target), Value::Object(extra)) = (target, extra) {
        for (k, v) in extra {
            target.insert(k, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt9_values() {
        assert_eq!(fmt9(0.0), "0");
        assert_eq!(fmt9(-0.0), "0");
        assert_eq!(fmt9(6.1e-17), "0");
        assert_eq!(fmt9(2.828427124746), "2.82842712");
        assert_eq!(fmt9(1.0), "1.00000000");
        assert_eq!(fmt9(-std::f64::consts::FRAC_1_SQRT_2), "-0.707106781");
        assert_eq!(fmt9(22.5), "22.5000000");
    }

    #[test]
    fn sweep_grid_edges() {
        let g = sweep_grid(0.0, 90.0, 22.5).unwrap();
        assert_eq!(g, vec![0.0, 22.5, 45.0, 67.5, 90.0]);
        // step beyond the range still yields the start point
        assert_eq!(sweep_grid(10.0, 20.0, 50.0).unwrap(), vec![10.0]);
        assert!(sweep_grid(0.0, 90.0, 0.0).is_err());
        assert!(sweep_grid(0.0, 90.0, -1.0).is_err());
    }

    #[test]
    fn backend_requires_a_choice() {
        let args = BackendArgs { analytic: false, model: None, trials: 10, seed: 1, partitions: None };
        assert!(args.resolve().is_err());
        let args = BackendArgs { analytic: true, model: None, trials: 10, seed: 1, partitions: None };
        assert_eq!(args.resolve().unwrap().model, ModelKind::Phase);
    }

    #[test]
    fn scan_budget_enforced() {
        let code = run_from(["bellphase", "scan", "--analytic", "--step", "0.001"]);
        assert_eq!(code, 2);
    }
}
