// SPDX-License-Identifier: Apache-2.0

//! `bhg`: algebra inspection, curve integration, grid-map residuals and
//! loop-family checks.

mod cli;
mod commands;
mod failure;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command};
use failure::{Failure, Outcome};
use output::Format;

/// Options shared by every command after flag and environment resolution.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub tol: Option<f64>,
    pub format: Option<Format>,
}

fn dispatch(cli: &Cli) -> Outcome {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Failure::Usage(format!("tolerance must be positive, got {t}")));
        }
    }
    let settings = Settings { tol: cli.tol, format: cli.format };
    match &cli.command {
        Command::Algebra(a) => commands::algebra::run(a, &settings),
        Command::Curve(c) => commands::curve::run(c, &settings),
        Command::Map(m) => commands::map::run(m, &settings),
        Command::Loop(l) => commands::loops::run(l, &settings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            f.exit_code()
        }
    }
}
