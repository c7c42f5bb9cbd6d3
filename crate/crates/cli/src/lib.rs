//! Front end for the `starlike` binary: argument grammar, report records, the
//! SVG renderer and the commands themselves.

// Range checks are written `!(x > lo)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod output;
pub mod report;
pub mod svg;

use std::fmt;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    CheckFailed = 1,
    Usage = 2,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, out-of-range parameters, unwritable output.
    Usage(String),
    /// The computation itself broke down (singular point, degenerate w).
    Evaluation(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) => Status::Usage,
            CliError::Evaluation(_) => Status::CheckFailed,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Evaluation(msg) => f.write_str(msg),
        }
    }
}

impl From<starlike_core::Error> for CliError {
    fn from(e: starlike_core::Error) -> Self {
        use starlike_core::Error as E;
        match e {
            E::Domain { .. } | E::Invalid(_) => CliError::Usage(e.to_string()),
            _ => CliError::Evaluation(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("cannot write output: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Runs a parsed command line; `Ok(true)` when every check passed.
pub fn run(cli: args::Cli) -> CliResult<bool> {
    let threads = cli.threads;
    let body = move || commands::dispatch(cli.command);
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} threads: {e}")))?
            .install(body),
        None => body(),
    }
}
