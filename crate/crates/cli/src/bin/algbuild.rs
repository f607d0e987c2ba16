use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use reylie_cli::{emit, input_error, run_build, Attach, Common, BUILD_KINDS};

/// Build a structure from JSON inputs, certify it and write it out.
#[derive(Parser)]
#[command(name = "algbuild", version)]
struct Cli {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(BUILD_KINDS))]
    kind: String,
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Output file for the built document.
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
    #[command(flatten)]
    attach: Attach,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run_build(&cli.kind, &cli.files, &cli.attach, Some(&cli.out), &cli.common) {
        Ok((report, _)) => emit(&report, &cli.common),
        Err(e) => input_error(&e),
    };
    ExitCode::from(code as u8)
}
