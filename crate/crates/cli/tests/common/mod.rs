#![allow(dead_code)]

use clap::Parser;
use quadkit_cli::args::Cli;
use quadkit_cli::report::Report;
use serde_json::Value;

pub fn run(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("quadkit").chain(args.iter().copied()))
        .unwrap_or_else(|e| panic!("bad arguments {args:?}: {e}"));
    quadkit_cli::run(&cli).unwrap_or_else(|e| panic!("{args:?} failed: {e}"))
}

/// The JSON report with the wall-clock field zeroed.
pub fn stable_json(mut report: Report) -> String {
    report.wall_time_ms = 0;
    report.to_json()
}

pub fn verdict(report: &Report, name: &str) -> String {
    let e = report
        .entry(name)
        .unwrap_or_else(|| panic!("no entry {name}"));
    serde_json::to_value(e.verdict).unwrap().as_str().unwrap().to_string()
}

pub fn witness<'a>(report: &'a Report, name: &str) -> &'a Value {
    &report.entry(name).unwrap().witness
}

pub fn fixture(name: &str) -> String {
    format!("tests/fixtures/{name}")
}
