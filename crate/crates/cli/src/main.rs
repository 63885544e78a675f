mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Ctx;
use config::RunConfig;
use error::CliError;

/// Phase-space simulation of cold atoms and light-pulse interferometers in gravity.
///
/// Runs are configured by a `key = value` file (`--config`); `--set key=value`,
/// `--grid` and the other flags override file keys.
#[derive(Parser)]
#[command(name = "gravphase", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file (stdout if omitted).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Cross-check against the split-step Schrödinger simulation.
    #[arg(long, global = true, value_enum)]
    check: Option<Check>,

    /// Phase-space grid size, overriding `n_z` and `n_p`.
    #[arg(long, global = true, value_name = "NZ,NP")]
    grid: Option<String>,

    /// Draw sweep phases at random from this seed instead of a regular grid.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Override a single key.
    #[arg(long = "set", short = 's', global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Oracle,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Wigner function of the initial state, plus its marginals.
    Transform,
    /// Wigner function after one interferometer path or a classical flow.
    Propagate,
    /// Exit-port report for one interferometer configuration.
    Ifm,
    /// Exit probability over a sweep of the laser phase.
    IfmSweep,
    /// Bouncer or gravitational-Coulomb spectrum.
    Eigen,
    /// Closed-form exit probability against the split-step simulation.
    OracleCompare,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Transform => "transform",
            Command::Propagate => "propagate",
            Command::Ifm => "ifm",
            Command::IfmSweep => "ifm-sweep",
            Command::Eigen => "eigen",
            Command::OracleCompare => "oracle-compare",
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(g) = &cli.grid {
        let (nz, np) = g
            .split_once(',')
            .ok_or_else(|| CliError::Config(format!("--grid expects NZ,NP, got `{g}`")))?;
        cfg.set("n_z", nz.trim())?;
        cfg.set("n_p", np.trim())?;
    }
    for pair in &cli.set {
        cfg.set_pair(pair)?;
    }
    let ctx = Ctx {
        cfg,
        command: cli.command.name(),
        out: cli.out,
        check_oracle: matches!(cli.check, Some(Check::Oracle)),
        seed: cli.seed,
    };
    match cli.command {
        Command::Transform => commands::transform(&ctx),
        Command::Propagate => commands::propagate(&ctx),
        Command::Ifm => commands::ifm(&ctx),
        Command::IfmSweep => commands::ifm_sweep(&ctx),
        Command::Eigen => commands::eigen(&ctx),
        Command::OracleCompare => commands::oracle_compare(&ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gravphase: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
