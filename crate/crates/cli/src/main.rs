//! `quadzeta`: compute and certify local Euler factors from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad
//! arguments.

mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Clock};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };

    let clock = Clock::start(!cli.no_timing);
    let outcome = match &cli.command {
        Command::Factor(a) => commands::factor(a, &clock),
        Command::Verify(a) => commands::verify(a, &clock),
        Command::Zeros(a) => commands::zeros(a, &clock),
        Command::Oracle(a) => commands::oracle(a, &clock),
        Command::Genfun(a) => commands::genfun(a, &clock),
    };

    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
