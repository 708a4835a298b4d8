//! Thin batch runner over the library: `eval`, `hilbert`, `verify`,
//! `report`. Exit codes: 0 pass, 1 check failure, 2 usage, 3 I/O.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use genus_one::cli::{
    cmd_eval, cmd_hilbert, cmd_report, cmd_verify, exit_code_for, RunConfig, EXIT_IO, EXIT_OK,
    EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "genus1", version, about = "Canonical integrals of genus one: evaluation, Hilbert pairs, verification suites, reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Flat key-value configuration file; flags override file values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Suite names (repeatable or comma-separated); `all` selects every suite.
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<String>,
    /// Fixture names (repeatable or comma-separated); `all` selects the registry.
    #[arg(long = "fixture", value_delimiter = ',')]
    fixtures: Vec<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Radial grid resolution (points per decade).
    #[arg(long = "grid-per-decade")]
    grid_per_decade: Option<usize>,
    /// Identity-residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for randomized spot checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (affects wall time only).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate fields and curves for named fixtures into CSV grids.
    Eval(Common),
    /// Compute Hilbert pairs for the smooth fixtures.
    Hilbert(Common),
    /// Run verification suites; exit 1 if any check fails.
    Verify(Common),
    /// Merged human-readable summary plus plot-data CSVs.
    Report(Common),
}

fn build_config(common: &Common) -> Result<RunConfig, genus_one::Error> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            RunConfig::parse(&text)?
        }
        None => RunConfig::default(),
    };
    if !common.suites.is_empty() {
        cfg.suites = common.suites.clone();
    }
    if !common.fixtures.is_empty() {
        cfg.fixtures = common.fixtures.clone();
    }
    if let Some(out) = &common.out {
        cfg.out_dir = out.clone();
    }
    if let Some(pd) = common.grid_per_decade {
        cfg.per_decade = pd;
    }
    if let Some(tol) = common.tol {
        cfg.tol = tol;
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(workers) = common.workers {
        cfg.workers = workers.max(1);
    }
    Ok(cfg)
}

fn run() -> i32 {
    let cli = Cli::parse();
    let (common, action): (&Common, fn(&RunConfig) -> Result<i32, genus_one::Error>) =
        match &cli.command {
            Command::Eval(c) => (c, |cfg| cmd_eval(cfg).map(|_| EXIT_OK)),
            Command::Hilbert(c) => (c, |cfg| cmd_hilbert(cfg).map(|_| EXIT_OK)),
            Command::Verify(c) => (c, cmd_verify),
            Command::Report(c) => (c, |cfg| cmd_report(cfg).map(|_| EXIT_OK)),
        };
    let cfg = match build_config(common) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                genus_one::Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            };
        }
    };
    match action(&cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run() as u8)
}
