//! Command-line front end for `genproj`.
//!
//! Exit codes: 0 success, 1 usage/parse/IO error, 2 validation failure.

pub mod args;
pub mod commands;
pub mod doc;
pub mod far;
pub mod numfmt;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, EXIT_OK, EXIT_USAGE};

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Matrix(a) => commands::matrix(a, out, err),
        Command::Validate(v) => commands::validate(v, out, err),
        Command::Frustum(v) => commands::frustum(v, out, err),
        Command::Render(a) => commands::render_cmd(a, err),
        Command::Sweep(a) => commands::sweep_cmd(a, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            report(&e, err);
            e.exit_code()
        }
    }
}

fn report(e: &CliError, err: &mut dyn Write) {
    match e {
        CliError::Invalid(r) => {
            for line in r.lines() {
                let _ = writeln!(err, "{line}");
            }
        }
        other => {
            let _ = writeln!(err, "error: {other}");
        }
    }
}
