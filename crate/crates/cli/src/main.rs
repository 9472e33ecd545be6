use std::io::Write;
use std::process::ExitCode;

use appell_cli::commands::{clap_exit_code, cmd_bench, cmd_compute, cmd_poly};
use appell_cli::config::{Cli, Command, RunConfig};
use appell_cli::CliError;
use clap::Parser;

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Compute(args) => cmd_compute(&RunConfig::from_args(&args)?),
        Command::Poly(args) => cmd_poly(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(clap_exit_code(&e) as u8);
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
