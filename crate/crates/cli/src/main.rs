//! `compsign`: command-line front end to the `compsign` library.
//!
//! Primary output goes to stdout. With `--out <dir>` every artifact and a
//! `manifest.json` are written there; otherwise the manifest goes to
//! stderr. Exit codes: 0 pass, 1 property violated, 2 inconclusive,
//! 3 usage error.

mod args;
mod commands;
mod config;
mod manifest;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Outcome};
use compsign::nonperiodic::CertifierConfig;
use manifest::{OutputDigest, RunManifest, SCHEMA_VERSION};

fn subcommand_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Counts(_) => "counts",
        Command::Polys(_) => "polys",
        Command::Sk(_) => "sk",
        Command::Signs(_) => "signs",
        Command::Verify(_) => "verify",
        Command::Nonperiodic(_) => "nonperiodic",
        Command::Enumerate(_) => "enumerate",
        Command::Construct(_) => "construct",
        Command::Experiment(_) => "experiment",
        Command::Qseries(_) => "qseries",
    }
}

fn load_config(cli: &Cli) -> Result<CertifierConfig, CliError> {
    match &cli.config {
        None => Ok(CertifierConfig::default()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            config::parse_config(&text).map_err(CliError::Usage)
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome, started: Instant) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("write failed: {e}"));
    let primary = &outcome.artifacts[0];
    std::io::stdout().write_all(primary.content.as_bytes()).map_err(io)?;

    let mut outputs = Vec::new();
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir).map_err(io)?;
        for a in &outcome.artifacts {
            fs::write(dir.join(&a.name), &a.content).map_err(io)?;
            outputs.push(OutputDigest::of(&a.name, a.content.as_bytes()));
        }
    } else {
        outputs.push(OutputDigest::of("-", primary.content.as_bytes()));
    }

    let mut params = outcome.params.clone();
    if let Some(path) = &cli.config {
        params.insert("config_file".into(), path.display().to_string());
    }
    let manifest = RunManifest {
        schema_version: SCHEMA_VERSION,
        tool: "compsign",
        version: env!("CARGO_PKG_VERSION"),
        command_line: std::env::args().collect(),
        subcommand: subcommand_name(&cli.command).to_string(),
        sets: outcome.sets.clone(),
        parameters: params,
        outputs,
        exit_code: (outcome.status as u8).to_string(),
        wall_time_seconds: format!("{:.3}", started.elapsed().as_secs_f64()),
    };
    match &cli.out {
        Some(dir) => fs::write(dir.join("manifest.json"), manifest.to_json()).map_err(io)?,
        None => std::io::stderr().write_all(manifest.to_json().as_bytes()).map_err(io)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = load_config(&cli)
        .and_then(|cfg| commands::run(&cli.command, &cfg))
        .and_then(|outcome| emit(&cli, &outcome, started).map(|_| outcome.status as u8));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
