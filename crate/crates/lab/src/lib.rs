//! Command-line front end for `fricke-core`: argument parsing, file
//! inputs, report rendering and the end-to-end `verify-paper` pipeline.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod inputs;
pub mod oracle;
pub mod verify;

pub use config::{OutputMode, RunConfig};
pub use error::LabError;

/// Parses `args` (program name first), runs the command and returns the
/// process exit status: 0 success, 1 certification failure, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match cli::Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let cfg = parsed.global.config();
    match commands::execute(&parsed.command, &cfg) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
