//! `totdil`: build and verify total and monotone dilations from JSON matrix files.

mod args;
mod check;
mod demo;
mod dilate;
mod failure;
mod gen;
mod io;

use std::process::ExitCode;

use clap::Parser;
use totdil_core::VerificationReport;

use args::{Cli, Command};
use failure::{CmdResult, Failure};

fn finish(report: &VerificationReport) -> CmdResult {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("serializable")
    );
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "worst check '{}'",
            report.worst.as_deref().unwrap_or("?")
        )))
    }
}

fn run(cli: Cli) -> CmdResult {
    let tol = cli.tolerances.policy()?;
    match &cli.command {
        Command::Dilate(args) => finish(&dilate::run(args, &tol)?),
        Command::Verify(args) => finish(&check::run(&args.check, &tol)?),
        Command::Gen(args) => {
            for path in gen::run(args, &tol)? {
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::Demo(args) => demo::run(args, &tol).map(drop),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
