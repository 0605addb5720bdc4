use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nstone::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let mut out = String::new();
    let status = cli::run(&args, &mut out);
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = stdout.write_all(out.as_bytes());
    ExitCode::from(status as u8)
}
