//! Command-line front end: argument parsing, dispatch, and text, JSON and CSV
//! output. Exit codes: 0 when the representation exists (or the command only
//! reports values), 2 when it does not, 1 on usage or configuration errors.

mod args;
mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, Format, GroupName, HwCommand};
pub use commands::{resolve_fiducial, write_grid_csv};
pub use report::{Artifacts, PiJson, Report, ReportEntry, ReportVerdict};

/// Parses `args` (including the program name) and runs the command, writing to
/// `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Check(a) => commands::cmd_check(a, out),
        Command::Pi(a) => commands::cmd_pi(a, out),
        Command::Spectrum(a) => commands::cmd_spectrum(a, out),
        Command::Hw(hw) => match &hw.command {
            HwCommand::Char(a) => commands::cmd_hw_char(a, out, err),
            HwCommand::Zeros(a) => commands::cmd_hw_zeros(a, out),
            HwCommand::Weight(a) => commands::cmd_hw_weight(a, out, err),
        },
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    run(std::env::args_os(), &mut out, &mut err)
}
