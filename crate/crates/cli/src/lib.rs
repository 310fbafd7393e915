//! `sgeo`: strong geodetic sets from the command line.
//!
//! Exit codes: 0 success, 1 invalid certificate, 2 parse or parameter error, 3 graph not
//! connected, 4 budget exhausted or inconclusive, 5 construction failure.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use thiserror::Error;

pub mod commands;
pub mod json;
pub mod spec;

pub use commands::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    NotConnected(String),
    /// Carries the partial bounds printed on standard output.
    #[error("{message}")]
    Inconclusive {
        message: String,
        partial: serde_json::Value,
    },
    #[error("{0}")]
    Construction(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::NotConnected(_) => 3,
            CliError::Inconclusive { .. } => 4,
            CliError::Construction(_) => 5,
        }
    }
}

impl From<sgeo_core::Error> for CliError {
    fn from(e: sgeo_core::Error) -> Self {
        use sgeo_core::Error as E;
        let message = e.to_string();
        match e {
            E::InvalidParameter(_) | E::Parse { .. } => CliError::Usage(message),
            E::NotConnected { .. } => CliError::NotConnected(message),
            E::BudgetExhausted { .. } | E::TruncationInconclusive { .. } => {
                CliError::Inconclusive {
                    message,
                    partial: serde_json::Value::Null,
                }
            }
            E::MatchingInfeasible(_) | E::VerificationFailed(_) => CliError::Construction(message),
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    match cli.execute(out, err) {
        Ok(code) => code,
        Err(e) => {
            if let CliError::Inconclusive { partial, .. } = &e {
                if !partial.is_null() {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(partial).unwrap());
                }
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
