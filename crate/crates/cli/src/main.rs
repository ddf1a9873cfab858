//! Batch front end: parse input files, dispatch to the invariant kernels,
//! and emit deterministic reports. Exit status is nonzero on any parse
//! error or invariant breach.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use stems_cli::{commands, report};
use stems_core::complexes::Coefficients;

#[derive(Parser)]
#[command(
    name = "stems",
    about = "Framed-cobordism invariants at desk scale: homology, degree, residue, Arf, and the stable-stem tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coeff {
    /// Integer coefficients (betti numbers and torsion)
    Z,
    /// Mod-2 coefficients (betti numbers only)
    Z2,
}

impl From<Coeff> for Coefficients {
    fn from(c: Coeff) -> Self {
        match c {
            Coeff::Z => Coefficients::Z,
            Coeff::Z2 => Coefficients::Z2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Homology of a complex file, one line per dimension
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "z")]
        coefficients: Coeff,
    },
    /// Degree of a simplicial map file, by both methods
    Degree { file: PathBuf },
    /// Residue of a framed-link file
    Residue { file: PathBuf },
    /// Arf invariant of a quadratic-form file
    Arf { file: PathBuf },
    /// Built-in witness reports
    Report {
        #[command(subcommand)]
        what: ReportKind,
    },
}

#[derive(Subcommand)]
enum ReportKind {
    /// The three-stem tables with all cross-checks
    Stems {
        /// Emit the machine-readable JSON twin instead of text
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Homology { file, coefficients } => {
            commands::cmd_homology(&read(&file)?, coefficients.into())
                .with_context(|| format!("{}", file.display()))
        }
        Command::Degree { file } => {
            commands::cmd_degree(&read(&file)?).with_context(|| format!("{}", file.display()))
        }
        Command::Residue { file } => {
            commands::cmd_residue(&read(&file)?).with_context(|| format!("{}", file.display()))
        }
        Command::Arf { file } => {
            commands::cmd_arf(&read(&file)?).with_context(|| format!("{}", file.display()))
        }
        Command::Report {
            what: ReportKind::Stems { json },
        } => {
            let stems = report::build_stems_report()?;
            if json {
                Ok(format!("{}\n", serde_json::to_string_pretty(&stems)?))
            } else {
                Ok(report::render_text(&stems))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
