//! `negmass`: verification suites and parameter scans.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod commands;
mod config;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::format::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl From<negmass::Error> for CliError {
    fn from(e: negmass::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "negmass", version, about = "Sign-transformation checks for Pauli, matter-wave and Klein-Gordon systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct IoArgs {
    /// Output file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// `key = value` config file; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clifford-algebra identities of the Dirac matrices
    Clifford {
        #[command(subcommand)]
        action: CliffordCmd,
    },
    /// Compare spectra of two sign-transformed Pauli Hamiltonians
    Equivalence(commands::EquivalenceArgs),
    /// Matter-wave dispersion along the imaginary wavenumber axis
    Dispersion {
        #[command(subcommand)]
        action: DispersionCmd,
    },
    /// Drude dielectric zeros and the equivalence route
    Dielectric {
        #[command(subcommand)]
        action: DielectricCmd,
    },
    /// Klein-Gordon mass-sign invariance
    Kg {
        #[command(subcommand)]
        action: KgCmd,
    },
}

#[derive(Debug, Subcommand)]
enum CliffordCmd {
    Verify(commands::CliffordArgs),
}

#[derive(Debug, Subcommand)]
enum DispersionCmd {
    Scan(commands::ScanArgs),
}

#[derive(Debug, Subcommand)]
enum DielectricCmd {
    Zeros(commands::DielectricArgs),
    Route(commands::DielectricArgs),
}

#[derive(Debug, Subcommand)]
enum KgCmd {
    Check(commands::KgArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // help and version exit 0, parse failures exit 2
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Clifford { action: CliffordCmd::Verify(a) } => commands::clifford_verify(a),
        Command::Equivalence(a) => commands::equivalence(a),
        Command::Dispersion { action: DispersionCmd::Scan(a) } => commands::dispersion_scan(a),
        Command::Dielectric { action: DielectricCmd::Zeros(a) } => commands::dielectric(a, false),
        Command::Dielectric { action: DielectricCmd::Route(a) } => commands::dielectric(a, true),
        Command::Kg { action: KgCmd::Check(a) } => commands::kg_check(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
