use std::process::ExitCode;

use clap::Parser;
use quadkit_cli::args::Cli;
use quadkit_cli::error::CliError;
use quadkit_cli::{render, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        let text = render(&report, cli.common.format);
        match &cli.common.output {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            }),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
