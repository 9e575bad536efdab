use std::process::ExitCode;

use clap::Parser;
use golomb_tools::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", outcome.body),
    }
    match outcome.failure {
        Some(msg) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
        None => ExitCode::SUCCESS,
    }
}
