//! `loglin`: rank, model dimension and degrees of freedom of hierarchical
//! log-linear models from the command line.
//!
//! Exit status: 0 when every requested check agrees, 1 on a disagreement,
//! 2 on bad input or usage.

mod cli;
mod cmd;
mod input;
mod render;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};

const USAGE_ERROR: u8 = 2;

fn dispatch(cli: Cli) -> anyhow::Result<cmd::Status> {
    match cli.command {
        Command::Info { input, out } => cmd::info(&input, out.output),
        Command::Rank {
            input,
            levels,
            verify,
            size_cap,
            out,
        } => cmd::rank(&input, &levels, verify, size_cap, out.output),
        Command::Evector {
            input,
            f_vector,
            e_vector,
            r,
            x,
            degree,
            tolerance,
            out,
        } => cmd::evector(
            cmd::EvectorArgs {
                input: &input,
                f_vector: f_vector.as_deref(),
                e_vector: e_vector.as_deref(),
                r,
                x: x.as_deref(),
                degree,
                tolerance,
            },
            out.output,
        ),
        Command::VerifySweep {
            max_m,
            levels,
            random,
            random_m,
            seed,
            size_cap,
            out,
        } => cmd::verify_sweep(
            cmd::SweepArgs {
                max_m,
                levels: &levels,
                random,
                random_m: &random_m,
                seed,
                size_cap,
            },
            out.output,
        ),
        Command::DumpMatrix {
            input,
            levels,
            size_cap,
        } => cmd::dump_matrix(&input, &levels, size_cap),
    }
}

/// Internal consistency failures count as disagreements, everything else is
/// an input problem.
fn error_status(err: &anyhow::Error) -> u8 {
    let inconsistent = err.chain().any(|e| {
        matches!(
            e.downcast_ref::<loglin_core::Error>(),
            Some(loglin_core::Error::Inconsistent(_))
        )
    });
    if inconsistent {
        cmd::DISAGREE
    } else {
        USAGE_ERROR
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(status) => ExitCode::from(status),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(error_status(&err))
        }
    }
}
