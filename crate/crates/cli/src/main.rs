//! `grasstwist`: exact computations for the twist on `Tot Hom(V, S)` over `Gr(2, d)`.

mod commands;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use commands::{Command, Failure};

#[derive(Parser, Debug)]
#[command(name = "grasstwist", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Computed,
}

/// Envelope printed for every successful invocation.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    pub elapsed_ms: f64,
    pub payload: serde_json::Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let start = Instant::now();
    match cli.command.run() {
        Ok(outcome) => {
            let report = RunReport {
                command: name.to_string(),
                status: outcome.status,
                k_max: outcome.k_max,
                elapsed_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
                payload: outcome.payload,
            };
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
                Format::Tsv => outcome.tsv.unwrap_or_else(|| render::tsv(&report.payload)),
                Format::Pretty => render::pretty(&report),
            };
            print!("{text}");
            if report.status == Status::Fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            let mut cmd = Cli::command();
            cmd.build();
            let usage = cmd
                .find_subcommand_mut(name)
                .map(|c| c.render_usage().to_string())
                .unwrap_or_default();
            eprintln!("error: {msg}\n\n{usage}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(3)
        }
    }
}
