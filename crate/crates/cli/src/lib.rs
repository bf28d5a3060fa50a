//! `liecohom`: exact Lie algebra cohomology from the command line.

pub mod commands;
pub mod error;
pub mod properties;
pub mod report;
pub mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::CliError;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coefficients {
    Trivial,
    Adjoint,
}

impl Coefficients {
    pub fn name(self) -> &'static str {
        match self {
            Coefficients::Trivial => "trivial",
            Coefficients::Adjoint => "adjoint",
        }
    }
}

/// Algebra specs: sl2, heisenberg:N, schrodinger:N, schrodinger-quotient:N,
/// abelian:K, file:PATH.
#[derive(Debug, Parser)]
#[command(name = "liecohom", version, about = "Exact Chevalley-Eilenberg cohomology of Lie algebras over Q")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, Jacobi check, center and derived algebra.
    Info { algebra: String },
    /// Dimensions of C^n, Z^n, B^n, H^n.
    Cohomology {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Coefficients::Trivial)]
        coeff: Coefficients,
        #[arg(long)]
        degree: usize,
        /// Also print cocycles representing a basis of H^n.
        #[arg(long)]
        representatives: bool,
    },
    /// Total, inner and outer derivation counts.
    Derivations { algebra: String },
    /// Levi-invariant part of H^n of an ideal.
    InvariantCohomology {
        #[arg(long)]
        ambient: String,
        /// Part name or comma-separated basis labels; defaults to the catalog split.
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        radical: Option<String>,
        #[arg(long, value_enum, default_value_t = Coefficients::Adjoint)]
        coeff: Coefficients,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        representatives: bool,
    },
    /// Central extension by a trivial-coefficient 2-cocycle.
    Extend {
        algebra: String,
        /// JSON list of [[i, j], m, "p/q"] entries.
        #[arg(long, conflicts_with = "representative")]
        cocycle: Option<PathBuf>,
        /// Index of a basis class of H^2(g, Q) to extend by.
        #[arg(long)]
        representative: Option<usize>,
        #[arg(long, default_value_t = 1)]
        central: usize,
    },
    /// Compare dim H^p(g, M) with the Hochschild-Serre factorized count.
    HsCheck {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        radical: Option<String>,
        #[arg(long, value_enum, default_value_t = Coefficients::Adjoint)]
        coeff: Coefficients,
        #[arg(long)]
        degree: usize,
    },
    /// Recompute the published claims for n = 2..=n-max against a dense oracle.
    VerifyPaper {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Randomized self-checks.
    PropertyCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

/// Rendered output and process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn execute(command: &Command) -> Result<(commands::Output, i32), CliError> {
    use Command::*;
    let ok = |o| Ok((o, 0));
    match command {
        Info { algebra } => ok(commands::info(algebra)?),
        Cohomology { algebra, coeff, degree, representatives } => {
            ok(commands::cohomology_cmd(algebra, *coeff, *degree, *representatives)?)
        }
        Derivations { algebra } => ok(commands::derivations(algebra)?),
        InvariantCohomology { ambient, levi, radical, coeff, degree, representatives } => ok(
            commands::invariant_cohomology(ambient, levi.as_deref(), radical.as_deref(), *coeff, *degree, *representatives)?,
        ),
        Extend { algebra, cocycle, representative, central } => {
            ok(commands::extend_cmd(algebra, cocycle.as_deref(), *representative, *central)?)
        }
        HsCheck { ambient, levi, radical, coeff, degree } => {
            ok(commands::hs_check(ambient, levi.as_deref(), radical.as_deref(), *coeff, *degree)?)
        }
        VerifyPaper { n_max } => {
            if *n_max < 2 {
                return Err(CliError::Usage("--n-max must be at least 2".into()));
            }
            let rows = verify::verify(*n_max);
            let mismatches = rows.iter().filter(|r| !r.oracle_agrees()).count();
            let count = |s: verify::Status| rows.iter().filter(|r| r.status == s).count();
            let payload = json!({
                "rows": rows,
                "pass": count(verify::Status::Pass),
                "fail": count(verify::Status::Fail),
                "discrepancy": count(verify::Status::Discrepancy),
                "oracle_mismatches": mismatches,
            });
            Ok((commands::Output { algebra: None, payload }, if mismatches == 0 { 0 } else { 3 }))
        }
        PropertyCheck { seed, trials } => {
            let results = properties::run(*seed, *trials);
            let failures: usize = results.iter().map(|r| r.failures).sum();
            let payload = json!({ "seed": seed, "trials": trials, "properties": results, "failures": failures });
            Ok((commands::Output { algebra: None, payload }, if failures == 0 { 0 } else { 3 }))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let echo = std::iter::once("liecohom".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    let start = Instant::now();
    match execute(&cli.command) {
        Ok((out, code)) => {
            let report = Report::new(echo, out.algebra, out.payload, start.elapsed());
            let stdout = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Table => report.to_table(),
            };
            let stderr = if code == 3 { "error: dense oracle or self-check disagreement\n".into() } else { String::new() };
            Outcome { stdout, stderr, code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
