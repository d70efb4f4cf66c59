mod args;
mod commands;
mod range;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// How a command ended; mapped to exit codes 0, 1 and 2.
pub enum Status {
    Ok,
    VerificationFailed,
    InputError(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Status::Ok => ExitCode::SUCCESS,
        Status::VerificationFailed => ExitCode::from(1),
        Status::InputError(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
