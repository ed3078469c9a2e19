//! Command-line front end for the quadkit workbench. The binary is a thin
//! wrapper around [`run`]; tests drive the same entry point in-process.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;

use std::time::Instant;

use args::{Cli, Format};
use error::CliError;
use report::{ConfigEcho, Report};

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let outcome = commands::execute(&cli.common, &cli.command)?;
    let subcommand = match &cli.command {
        args::Command::CheckPresentation { .. } => "check-presentation",
        args::Command::Points { .. } => "points",
        args::Command::PencilComplex { .. } => "pencil-complex",
        args::Command::Regularity { .. } => "regularity",
        args::Command::Strata { .. } => "strata",
    };
    let config = ConfigEcho {
        subcommand: subcommand.into(),
        inputs: outcome.inputs,
        field: outcome.field.to_string(),
        cutoff: cli.common.cutoff,
        hom_cutoff: cli.common.hom_cutoff,
        seed: cli.common.seed,
        format: cli.common.format.as_str().into(),
        params: outcome.params,
    };
    let mut report = Report::new(config, outcome.entries);
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}
