use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use twistfree::{run, text, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let json = cli.command.common().json.clone();
    let to_stdout = json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    let written = match &json {
        Some(_) if to_stdout => {
            std::io::stdout().write_all(outcome.report.to_json().as_bytes()).context("cannot write the report")
        }
        Some(path) => {
            std::fs::write(path, outcome.report.to_json()).with_context(|| format!("cannot write {}", path.display()))
        }
        None => Ok(()),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let summary = text::render(&outcome.report);
    if outcome.report.error.is_some() {
        eprint!("{summary}");
    } else if !to_stdout {
        print!("{summary}");
    }
    ExitCode::from(outcome.code as u8)
}
