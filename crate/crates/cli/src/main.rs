use std::process::ExitCode;

use clap::Parser;
use starlike_cli::{args::Cli, run, Status};

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help/--version.
    let cli = Cli::parse();
    let status = match run(cli) {
        Ok(true) => Status::Pass,
        Ok(false) => Status::CheckFailed,
        Err(e) => {
            eprintln!("error: {e}");
            e.status()
        }
    };
    ExitCode::from(status as u8)
}
