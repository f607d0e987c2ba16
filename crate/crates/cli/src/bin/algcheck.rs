use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use reylie_cli::{emit, input_error, run_check, Attach, Common, CHECK_KINDS};

/// Run an exhaustive check on structures read from JSON files.
#[derive(Parser)]
#[command(name = "algcheck", version)]
struct Cli {
    /// Which check to run.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_KINDS))]
    kind: String,
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[command(flatten)]
    attach: Attach,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run_check(&cli.kind, &cli.files, &cli.attach, &cli.common) {
        Ok(report) => emit(&report, &cli.common),
        Err(e) => input_error(&e),
    };
    ExitCode::from(code as u8)
}
