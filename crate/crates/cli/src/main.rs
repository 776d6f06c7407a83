//! `sgbench`: benchmark harness for the MCB-DQ sine-Gordon solver.
//!
//! Exit codes: 0 success (bench verdict pass), 1 bench verdict fail,
//! 2 invalid arguments or configuration, 3 numerical divergence.

mod baselines;
mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgdqm::{RmsMode, W2Method};

use config::{OutputFormat, RunConfig};

/// A failed run with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn from_core(e: sgdqm::Error) -> Self {
        let code = match e {
            sgdqm::Error::Diverged { .. } => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

#[derive(Parser)]
#[command(
    name = "sgbench",
    version,
    about = "Solve the 1D sine-Gordon equation by modified cubic B-spline differential quadrature and reproduce the published benchmark tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the solver and export per-snapshot CSV profiles plus a summary
    Solve(SolveArgs),
    /// Reproduce a published benchmark table and report computed vs published
    Bench(BenchArgs),
    /// Grid-refinement convergence study
    Converge(ConvergeArgs),
    /// Dump the DQ weight matrices with row-sum diagnostics
    Weights(WeightsArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// JSON file with RunConfig fields; explicit flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Benchmark problem id (1 soliton, 2 kink, 3 breather)
    #[arg(long)]
    example: Option<u8>,
    /// Domain endpoints, overriding the example default
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    domain: Option<Vec<f64>>,
    /// Grid spacing; must partition the domain into whole intervals
    #[arg(long)]
    h: Option<f64>,
    /// Time step
    #[arg(long)]
    dt: Option<f64>,
    /// Final time
    #[arg(long, value_name = "T")]
    t_end: Option<f64>,
    /// Wave speed (examples 2 and 3)
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Second-derivative weight construction: shu | spline
    #[arg(long)]
    w2_method: Option<W2Method>,
    /// RMS convention: conventional | literal
    #[arg(long)]
    rms_mode: Option<RmsMode>,
    /// Comma-separated snapshot times (the final time is always recorded)
    #[arg(long, value_delimiter = ',')]
    snapshot: Option<Vec<f64>>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// Summary format: csv | json
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Also emit a gnuplot script for the snapshots
    #[arg(long)]
    gnuplot: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Benchmark table id: 2, 3, 5 or 7
    #[arg(long)]
    table: u8,
    /// Second-derivative weight construction: shu | spline
    #[arg(long, default_value = "shu")]
    w2_method: W2Method,
    /// RMS convention: conventional | literal
    #[arg(long, default_value = "conventional")]
    rms_mode: RmsMode,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Report format: csv | json
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Benchmark problem id (1, 2 or 3)
    #[arg(long, required_unless_present = "self_test")]
    example: Option<u8>,
    /// Comma-separated descending spacings
    #[arg(long, value_delimiter = ',', required = true)]
    h_list: Vec<f64>,
    /// Time step
    #[arg(long, required_unless_present = "self_test")]
    dt: Option<f64>,
    /// Final time
    #[arg(long, value_name = "T", required_unless_present = "self_test")]
    t_end: Option<f64>,
    /// Wave speed (examples 2 and 3)
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    c: f64,
    /// Domain endpoints, overriding the example default
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    domain: Option<Vec<f64>>,
    /// Second-derivative weight construction: shu | spline
    #[arg(long, default_value = "shu")]
    w2_method: W2Method,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Tabulate synthetic h^2 errors instead of solving, to check the
    /// order computation in isolation
    #[arg(long)]
    self_test: bool,
}

#[derive(Args)]
struct WeightsArgs {
    /// Node count (at least 5)
    #[arg(long)]
    n: usize,
    /// Domain endpoints
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, default_values_t = [0.0, 1.0])]
    domain: Vec<f64>,
    /// Second-derivative weight construction: shu | spline
    #[arg(long, default_value = "shu")]
    w2_method: W2Method,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

fn pair(v: Vec<f64>) -> (f64, f64) {
    (v[0], v[1])
}

fn solve_config(args: SolveArgs) -> Result<(RunConfig, bool), Failure> {
    let base = args.config.as_deref().map(RunConfig::load).transpose()?;
    let need = |field: &str| Failure::usage(format!("--{field} is required (or provide --config)"));

    let cfg = match base {
        Some(mut cfg) => {
            if let Some(v) = args.example {
                cfg.example = v;
            }
            if let Some(v) = args.domain {
                cfg.domain = Some(pair(v));
            }
            if let Some(v) = args.h {
                cfg.h = v;
            }
            if let Some(v) = args.dt {
                cfg.dt = v;
            }
            if let Some(v) = args.t_end {
                cfg.t_end = v;
            }
            if let Some(v) = args.c {
                cfg.c = v;
            }
            if let Some(v) = args.w2_method {
                cfg.w2_method = v;
            }
            if let Some(v) = args.rms_mode {
                cfg.rms_mode = v;
            }
            if let Some(v) = args.snapshot {
                cfg.snapshot_times = v;
            }
            if let Some(v) = args.out {
                cfg.out = v;
            }
            if let Some(v) = args.format {
                cfg.format = v;
            }
            cfg
        }
        None => RunConfig {
            example: args.example.ok_or_else(|| need("example"))?,
            domain: args.domain.map(pair),
            h: args.h.ok_or_else(|| need("h"))?,
            dt: args.dt.ok_or_else(|| need("dt"))?,
            t_end: args.t_end.ok_or_else(|| need("t-end"))?,
            c: args.c.unwrap_or(0.5),
            w2_method: args.w2_method.unwrap_or_default(),
            rms_mode: args.rms_mode.unwrap_or_default(),
            snapshot_times: args.snapshot.unwrap_or_default(),
            out: args.out.unwrap_or_else(|| PathBuf::from("out")),
            format: args.format.unwrap_or_default(),
        },
    };
    Ok((cfg, args.gnuplot))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Cmd::Solve(args) => {
            let (cfg, gnuplot) = solve_config(args)?;
            commands::run_solve(cfg, gnuplot)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench(args) => {
            let pass = commands::run_bench(args.table, args.w2_method, args.rms_mode, args.out, args.format)?;
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Converge(args) => {
            commands::run_converge(commands::ConvergeParams {
                example: args.example.unwrap_or(1),
                c: args.c,
                domain: args.domain.map(pair),
                h_list: args.h_list,
                dt: args.dt.unwrap_or(1e-2),
                t_end: args.t_end.unwrap_or(1.0),
                method: args.w2_method,
                out: args.out,
                format: args.format,
                self_test: args.self_test,
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Weights(args) => {
            commands::run_weights(commands::WeightsParams {
                domain: pair(args.domain),
                n: args.n,
                method: args.w2_method,
                out: args.out,
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
