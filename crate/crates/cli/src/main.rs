use std::process::ExitCode;

use clap::Parser;
use transurf_cli::config::Cli;
use transurf_cli::RunConfig;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::from_cli(cli).and_then(|cfg| transurf_cli::run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("transurf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
