//! Command-line front end for `menhir-core`.

pub mod args;
pub mod commands;
pub mod json;

use thiserror::Error;

pub use args::Cli;
use args::Command;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] menhir_core::Error),
}

impl CliError {
    /// 1 for usage errors, 2 for domain errors (superluminal input, dimension mismatch, ...).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

/// What a subcommand produced: text for stdout and warnings for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Output {
    pub fn new(stdout: String, warnings: Vec<String>) -> Self {
        Self { stdout, warnings }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Compose(a) => Ok(commands::render_compose(&commands::compose(a)?, a.json)),
        Command::Menhir(a) => commands::menhir(a),
        Command::Scale(a) => commands::scale(a),
        Command::Identities(a) => commands::identities(a),
    }
}
