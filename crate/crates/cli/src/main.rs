use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Enumerate and analyse |k|-gradings of complex simple Lie algebras.
///
/// Types are written as a family letter and rank (`D7`, `E8`); subsets Σ as
/// comma-separated 1-based Bourbaki indices (`--sigma 1,4,5`).
#[derive(Debug, Parser)]
#[command(name = "lie-gradings", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Depth of the grading.
    #[arg(long, global = true, default_value_t = 3)]
    pub k: u32,

    /// Subset of simple roots, e.g. `1,4,5`.
    #[arg(long, global = true)]
    pub sigma: Option<String>,

    /// Merge subsets related by a diagram automorphism.
    #[arg(long, global = true)]
    pub dedupe: bool,

    /// Families to scan: `all` or letters such as `ABG`.
    #[arg(long, global = true, default_value = "all")]
    pub families: String,

    /// Largest rank included in scans and tables.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_rank: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots and the highest root.
    Roots { r#type: String },
    /// All subsets Σ with the requested depth, with dimensions and reductive part.
    Gradings { r#type: String },
    /// Degree dimensions of one grading (needs --sigma).
    Dims { r#type: String },
    /// Reductive part of one grading (needs --sigma).
    Levi { r#type: String },
    /// Freeness verdicts for a type, or `scan` for a family scan.
    Free { target: String },
    /// Freeness scan over families and ranks.
    Scan,
    /// Reproduce the reference tables with errata.
    Tables,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match commands::run(&cli).and_then(|out| render::render(&out, cli.format)) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
