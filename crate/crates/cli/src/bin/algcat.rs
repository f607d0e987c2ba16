use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use reylie::catalog::{catalog, NAMES};
use reylie::io::to_pretty;
use reylie::Report;
use reylie_cli::{emit, input_error, Common};

/// Load a catalog entry, re-run its checks, and optionally write it out.
#[derive(Parser)]
#[command(name = "algcat", version, after_help = format!("Entries: {}", NAMES.join(", ")))]
struct Cli {
    name: String,
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

fn run(cli: &Cli) -> reylie::Result<Report> {
    let entry = catalog(&cli.name)?;
    if let Some(path) = &cli.out {
        std::fs::write(path, to_pretty(&entry.to_json()?))?;
    }
    let mut report = Report::new(format!("algcat {}", cli.name), cli.common.first_only);
    for c in entry.checks {
        report.push(c);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(report) => emit(&report, &cli.common),
        Err(e) => input_error(&e),
    };
    ExitCode::from(code as u8)
}
