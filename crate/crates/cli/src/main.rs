mod args;
mod commands;
mod output;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use ppsign_core::oracle::DEFAULT_NODE_BUDGET;
use ppsign_core::exactalg::DEFAULT_SUBSET_BUDGET;
use ppsign_core::verify::Budgets;

use args::{Cli, Command};
use commands::{RunConfig, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ppsign_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(ppsign_core::Error::ResourceLimit { .. }) => 3,
            CliError::Core(ppsign_core::Error::Consistency(_)) => 1,
            _ => 2,
        }
    }
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let g = &cli.global;
    let cfg = RunConfig {
        budgets: Budgets {
            node_budget: g.node_budget.unwrap_or(DEFAULT_NODE_BUDGET),
            subset_budget: g.subset_budget.unwrap_or(DEFAULT_SUBSET_BUDGET),
        },
        timing: g.timing,
        absolute: RunConfig::parse_sign_conventions(&g.sign_convention)?,
    };
    let (text, status) = match &cli.command {
        Command::Enumerate(a) => {
            let (r, s) = commands::enumerate(a, &cfg)?;
            (output::render_enumerate(&r, g.format), s)
        }
        Command::Verify(a) => {
            let (r, s) = commands::verify(a, &cfg)?;
            (output::render_verify(&r, g.format), s)
        }
        Command::Identity(a) => {
            let (r, s) = commands::identity(a, &cfg)?;
            (output::render_identity(&r, g.format), s)
        }
    };
    match &g.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strict = cli.global.strict;
    match run(cli) {
        Ok(s) if s.mismatch => ExitCode::from(1),
        Ok(s) if s.skipped && strict => {
            eprintln!("some computations were skipped by a budget");
            ExitCode::from(3)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
