use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use gdp_cli::{run, shield_negative_tokens, Cli, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(shield_negative_tokens(std::env::args())) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version are not failures; usage errors are bad input,
            // not the "undecided" status clap would use by default.
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::InvalidInput.code() as u8),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(&cli, &mut out) {
        Ok(status) => status,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.status
        }
    };
    let _ = out.flush();
    ExitCode::from(status.code() as u8)
}
