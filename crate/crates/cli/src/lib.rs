//! Command-line front end: flag parsing, dispatch to the core routines and
//! byte-stable CSV / JSON tables.

pub mod commands;
pub mod config;
pub mod output;

use std::io::Write;

use thiserror::Error;

pub use commands::Outcome;
pub use config::{Cli, Command, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            _ => 1,
        }
    }
}

/// Validate, compute and emit. The table goes to `--output` when given and to
/// `stdout` otherwise; verify's per-suite lines always go to `stdout`.
/// Returns the process exit code.
pub fn run(command: &Command, stdout: &mut impl Write) -> Result<u8, CliError> {
    let cfg = RunConfig::resolve(command)?;
    let outcome = commands::dispatch(&cfg)?;
    let meta = cfg.meta();
    let bytes = output::render(&outcome.table, &meta, cfg.format)?;
    for line in &outcome.messages {
        writeln!(stdout, "{line}")?;
    }
    match &cfg.output {
        Some(path) => output::write_atomic(path, &bytes)?,
        // verify prints its summary lines; the full table only on request
        None if cfg.command == "verify" => {}
        None => stdout.write_all(&bytes)?,
    }
    Ok(if outcome.success { 0 } else { 1 })
}
