use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qsheaf::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli);
    if let Some(report) = &outcome.report {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(report.as_bytes());
        let _ = stdout.flush();
    }
    if let Some(message) = &outcome.error {
        eprintln!("error: {message}");
    }
    ExitCode::from(outcome.status.code() as u8)
}
