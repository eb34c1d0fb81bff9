mod config;
mod report;
mod table;
mod verify;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Command};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Table(args) => {
            let text = table::run(&args)?;
            emit(&text, args.common.output.as_deref())?;
        }
        Command::Verify(args) => {
            let outcome = verify::check_all(&args)?;
            emit(
                &verify::render(&outcome, &args),
                args.common.output.as_deref(),
            )?;
            if let Some(e) = &outcome.error {
                eprintln!("error: {e}");
                return Ok(EXIT_BUDGET);
            }
            if !outcome.all_passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Sample(args) => {
            let text = report::sample(&args)?;
            emit(&text, args.common.output.as_deref())?;
        }
        Command::Count(args) => {
            let text = report::count(&args)?;
            emit(&text, args.common.output.as_deref())?;
        }
        Command::Encode(args) => {
            let text = match report::encode(&args) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            emit(&text, args.common.output.as_deref())?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
