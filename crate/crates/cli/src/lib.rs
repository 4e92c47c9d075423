//! Command-line front end for the `opcalc` engine.
//!
//! Every command produces an [`OutputEnvelope`] rendered either as text or
//! as JSON. Exit codes: 0 when every check passed, 2 for usage and parse
//! errors, 3 when a check or internal assertion fails.

pub mod commands;
pub mod envelope;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::CommandError;
pub use envelope::{Check, OutputEnvelope, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "opcalc",
    version,
    about = "Exact operator calculus, difference equations and even zeta values"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest polynomial degree accepted by `faulhaber` and `solve`.
    #[arg(long, global = true, default_value_t = commands::DEFAULT_MAX_POWER)]
    pub max_power: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Polynomial f with f(x+1) - f(x) = x^power and f(0) = 0.
    Faulhaber { power: usize },
    /// Solve f(x+1) - f(x) = g(x) for a polynomial g, e.g. "1/2*x^2 - 3".
    Solve {
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Exact zeta(2), zeta(4), ..., zeta(max_k) by coefficient comparison.
    Zeta {
        #[arg(long)]
        max_k: u32,
        /// Terms of the partial sum used for the numeric cross-check.
        #[arg(long, default_value_t = 1_000_000)]
        verify_terms: u64,
    },
    /// Numeric check of the pole expansion of 1/(e^z - 1) at a real point.
    PfdCheck {
        #[arg(long, allow_negative_numbers = true)]
        z0: f64,
        #[arg(long, default_value_t = 1000)]
        terms: u64,
    },
    /// Seeded random check that the Bourlet product composes operators.
    BourletCheck {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

pub fn report(cli: &Cli) -> Result<Report, CommandError> {
    match &cli.command {
        Command::Faulhaber { power } => commands::faulhaber_cmd(*power, cli.max_power),
        Command::Solve { g } => commands::solve_cmd(g, cli.max_power),
        Command::Zeta {
            max_k,
            verify_terms,
        } => commands::zeta_cmd(*max_k, *verify_terms),
        Command::PfdCheck { z0, terms } => commands::pfd_check_cmd(*z0, *terms),
        Command::BourletCheck { seed, cases } => commands::bourlet_check_cmd(*seed, *cases),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match report(cli) {
        Ok(r) => Outcome {
            stdout: match cli.format {
                Format::Text => r.to_text(),
                Format::Json => r.envelope.to_json(),
            },
            stderr: String::new(),
            exit_code: if r.envelope.all_passed() { 0 } else { 3 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
            exit_code: e.exit_code(),
        },
    }
}
