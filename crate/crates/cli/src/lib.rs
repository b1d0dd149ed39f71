//! Library side of the `walled-tangle` command-line tool: argument types and
//! a `run` function that turns a parsed command line into a report.

mod args;
mod commands;
mod verify;

pub use args::{Cli, Command, Format, Suite, WordInput};

use std::fmt;

use serde_json::Value;

/// A usage or input error; the binary exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

pub(crate) fn err(e: impl fmt::Display) -> CliError {
    CliError(e.to_string())
}

/// Result of one command, in both output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub human: String,
    pub passed: bool,
}

/// Rendered output; `passed` is false when a verification failed.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let report = commands::execute(&cli.command, cli.seed)?;
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).map_err(err)? + "\n",
        Format::Human => {
            let mut s = report.human;
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    Ok(Output { text, passed: report.passed })
}
