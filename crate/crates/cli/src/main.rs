//! `catfrac`: validate finite categories, build categories of elements and
//! localizations, and run the universal-property verifiers on JSON files.
//!
//! Exit status: 0 when everything checked holds, 1 when a checked property
//! fails, 2 on malformed input or a failed precondition.

mod commands;
mod error;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Which;

#[derive(Debug, Parser)]
#[command(name = "catfrac", version, about = "Finite categories of elements and of fractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the validator matching the file's kind.
    Validate { path: PathBuf },
    /// Build the category of elements of a pseudofunctor.
    Groth {
        path: PathBuf,
        /// Require a contravariant diagram and report its cleavage.
        #[arg(long)]
        contravariant: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the four fractions axioms.
    Axioms { path: PathBuf },
    /// Build the category of fractions.
    Localize {
        path: PathBuf,
        /// Re-derive every composite with every filler and representative.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a universal property against a test category.
    Verify {
        #[arg(value_enum)]
        which: Which,
        path: PathBuf,
        /// Category file to test against; bundles may carry their own.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Compare the internal construction with the direct one.
    Crosscheck {
        path: PathBuf,
        /// Rewire one internal composite first, as a negative control.
        #[arg(long, value_name = "ENTRY")]
        perturb: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { path } => commands::validate(path),
        Command::Groth {
            path,
            contravariant,
            json,
        } => commands::groth(path, *contravariant, *json),
        Command::Axioms { path } => commands::axioms(path),
        Command::Localize { path, exhaustive, json } => commands::localize_cmd(path, *exhaustive, *json),
        Command::Verify { which, path, against } => commands::verify(*which, path, against.as_deref()),
        Command::Crosscheck { path, perturb } => commands::crosscheck(path, *perturb),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
