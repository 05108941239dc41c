//! Command line front end: sample curves, compute Frenet data, run the
//! certification suites, and compare curves for similarity.
//!
//! Exit codes are part of the interface:
//!   0  success / verification passed / curves similar
//!   1  verification failed / curves not similar
//!   2  bad arguments or parameters
//!   3  I/O failure (unreadable input, unwritable output)
//!   4  Frenet frame undefined where it was needed
//!   5  the two curves cannot be compared at all

mod cmd;
mod config;
mod curves;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "quatcurve",
    version,
    about = "Sampling, Frenet analysis, and certification of special space curves",
    arg_required_else_help = true
)]
struct Cli {
    /// TOML file overriding the built-in defaults (grid, tol, margin,
    /// fd_step); flags still win.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a curve on a grid and emit t,s,x,y,z rows.
    Sample(cmd::sample::SampleArgs),
    /// Emit the Frenet apparatus along a curve as CSV.
    Frenet(cmd::frenet::FrenetArgs),
    /// Run a certification suite and report each assertion.
    Verify(cmd::verify::VerifyArgs),
    /// Decide whether two curves are similar.
    Compare(cmd::compare::CompareArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let defaults = config::load(cli.config.as_deref())?;
    let code = match &cli.command {
        Command::Sample(args) => cmd::sample::run(args, &defaults)?,
        Command::Frenet(args) => cmd::frenet::run(args, &defaults)?,
        Command::Verify(args) => cmd::verify::run(args, &defaults)?,
        Command::Compare(args) => cmd::compare::run(args, &defaults)?,
    };
    Ok(code as u8)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use quatcurve::Error;
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 3;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::SingularPoint { .. } | Error::UndefinedFrame { .. }) => 4,
        Some(Error::IncomparableRange(_) | Error::CriterionInapplicable(_)) => 5,
        _ => 2,
    }
}
