use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use reylie::block::block_window_check;
use reylie::{parse_rat, Report};
use reylie_cli::{emit, input_error, Common};

/// Check the Reynolds identity of the Block algebra B(q) on a window.
#[derive(Parser)]
#[command(name = "algblock", version)]
struct Cli {
    /// Rational parameter, e.g. 1/2.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, allow_hyphen_values = true)]
    lo: i64,
    #[arg(long, allow_hyphen_values = true)]
    hi: i64,
    /// Drop indices with m+i+1 = 0 instead of rejecting the window.
    #[arg(long)]
    exclude_singular: bool,
    #[command(flatten)]
    common: Common,
}

fn run(cli: &Cli) -> reylie::Result<Report> {
    let start = Instant::now();
    let q = parse_rat(&cli.q)?;
    let mut cmd = format!("algblock --q {} --lo {} --hi {}", cli.q, cli.lo, cli.hi);
    if cli.exclude_singular {
        cmd.push_str(" --exclude-singular");
    }
    let mut report = Report::new(cmd, cli.common.first_only);
    report.push(block_window_check(&q, cli.lo, cli.hi, cli.exclude_singular)?);
    report.wall_time = Some(start.elapsed());
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
