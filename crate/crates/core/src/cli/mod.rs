//! Command-line front end: `simulate`, `figure` and `selftest`.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 bad config or arguments,
//! 3 infeasible run.

mod config;
mod dataset;
mod presets;
mod selftest;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use config::{Axis, ConfigError, GridConfig, MeasureConfig, ModelConfig, ResolvedRun, RunConfig, RunSettings};
pub use dataset::{format_value, Dataset, SeparableStart, SeriesSummary, Sidecar, Truncation, CSV_HEADER};
pub use presets::{figure_config, Figure};
pub use selftest::{block_vs_dense, kraus_vs_closed_form, run_checks, selftest, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

/// Environment variable that turns on the mode-function corruption before
/// `selftest` in debug builds.
pub const CORRUPTION_ENV: &str = "IONPAIR_CORRUPT_MODE_STRENGTH";

#[derive(Parser, Debug)]
#[command(name = "ionpair", version, about = "Entanglement dynamics of two three-level ions sharing a phonon mode")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the sweep described by a TOML config (or a previous JSON sidecar).
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Output prefix; `.csv` and `.json` are appended.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run a preset sweep.
    Figure {
        #[arg(value_parser = parse_figure)]
        name: Figure,
        /// Sech width in units of 1/|λ₁|; required for fig4.
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare the fast paths against their oracles.
    Selftest,
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    s.parse()
}

/// A run that stopped early, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn config(message: impl ToString) -> Self {
        Self { code: EXIT_CONFIG, message: message.to_string() }
    }

    fn infeasible(message: impl ToString) -> Self {
        Self { code: EXIT_INFEASIBLE, message: message.to_string() }
    }
}

/// Resolves, computes and writes one dataset. `workers` overrides the config.
pub fn run_config(
    config: &RunConfig,
    preset: Option<&str>,
    out: Option<&Path>,
    workers: Option<usize>,
) -> Result<(Dataset, PathBuf, PathBuf), Failure> {
    let resolved = config.resolve().map_err(Failure::config)?;
    let workers = workers.or(config.run.workers).unwrap_or_else(rayon::current_num_threads);
    if workers == 0 {
        return Err(Failure::config("--workers must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::infeasible(format!("cannot start worker pool: {e}")))?;
    let dataset = pool.install(|| Dataset::compute(config, &resolved, preset)).map_err(Failure::infeasible)?;
    let prefix = out.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from(&config.run.output));
    let (csv, json) = dataset.write(&prefix).map_err(|e| Failure::infeasible(format!("{}: {e}", prefix.display())))?;
    Ok((dataset, csv, json))
}

fn report(result: Result<(Dataset, PathBuf, PathBuf), Failure>) -> i32 {
    match result {
        Ok((dataset, csv, json)) => {
            println!("wrote {} rows to {} ({})", dataset.sidecar.rows, csv.display(), json.display());
            EXIT_OK
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn run_selftest() -> i32 {
    #[cfg(debug_assertions)]
    if std::env::var(CORRUPTION_ENV).is_ok_and(|v| v == "1") {
        crate::model::set_mode_strength_corruption(true);
        println!("NOTE mode_strength corruption enabled");
    }
    let mut stdout = std::io::stdout().lock();
    match selftest(&mut stdout) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_SELFTEST_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_SELFTEST_FAILED
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Simulate { config, out, workers } => match RunConfig::load(&config) {
            Ok(cfg) => report(run_config(&cfg, None, out.as_deref(), workers)),
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_CONFIG
            }
        },
        Command::Figure { name, tau, out, workers } => match figure_config(name, tau) {
            Ok(cfg) => report(run_config(&cfg, Some(name.name()), out.as_deref(), workers)),
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_CONFIG
            }
        },
        Command::Selftest => run_selftest(),
    }
}
