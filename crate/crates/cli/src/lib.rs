//! Command-line front end and file formats for the topology workbench.
//!
//! The library half holds the literal-grammar parsers, the JSON document
//! types, text rendering and DOT emission, so tests and other tools can
//! drive the exact same code path as the `ordtop` binary.

use std::fmt;

pub mod app;
pub mod doc;
pub mod dot;
pub mod parse;
pub mod render;

/// Errors split by exit code: usage problems exit 2, everything that went
/// wrong while computing exits 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Runtime(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Parses the argument list and runs it; prints output and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match app::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Clap prints help/version on stdout with code 0 and usage
            // errors on stderr with code 2.
            let _ = e.print();
            return e.exit_code();
        }
    };
    match app::execute(&cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
