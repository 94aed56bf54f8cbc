//! Command-line front end: JSON documents in, JSON (or text) reports out.
//!
//! Exit codes: 0 decided true, 1 decided false, 2 bounded or capped,
//! 3 input error.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use commands::{Command, Defaults};
use document::{Body, Store};
use error::CliError;
use report::{error_json, Outcome, INPUT_ERROR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "sacts", version, about = "Decide properties of finite monoid acts and emit certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// JSON object of default option values, e.g. {"bound": 3}.
    #[arg(long, global = true)]
    pub defaults: Option<PathBuf>,
    /// Extra document files for name resolution.
    #[arg(long = "lib", global = true)]
    pub lib: Vec<PathBuf>,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Canon { .. } => "canon",
        Command::Hom { .. } => "hom",
        Command::Lift { .. } => "lift",
        Command::Classify { .. } => "classify",
        Command::Factor { .. } => "factor",
        Command::Pushout { .. } => "pushout",
        Command::Pullback { .. } => "pullback",
        Command::Tensor { .. } => "tensor",
        Command::Rees { .. } => "rees",
        Command::Flat { .. } => "flat",
        Command::Pure { .. } => "pure",
        Command::Stable { .. } => "stable",
        Command::Precover { .. } => "precover",
        Command::CoverCheck { .. } => "cover-check",
        Command::WfsVerify(_) => "wfs-verify",
        Command::Soa { .. } => "soa",
        Command::CofCert { .. } => "cof-cert",
        Command::CentredPrecover { .. } => "centred-precover",
        Command::Job { .. } => "job",
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let defaults = match &cli.defaults {
        Some(p) => Defaults::load(p)?,
        None => Defaults::default(),
    };
    if let Command::Job { job } = &cli.command {
        let store = Store::load(&[&job.path])?;
        let name = match &job.name {
            Some(n) => n.clone(),
            None => store.subjects().last().cloned().unwrap_or_default(),
        };
        let Body::Job { args } = &store.get(&name)?.body else {
            return Err(CliError::Reference(format!("\"{name}\" is not a job")));
        };
        let inner = Cli::try_parse_from(std::iter::once("sacts".to_string()).chain(args.iter().cloned()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let mut lib = cli.lib.clone();
        lib.extend(inner.lib.iter().cloned());
        return commands::run(&inner.command, &defaults, &lib);
    }
    commands::run(&cli.command, &defaults, &cli.lib)
}

/// Run a parsed command line, returning the text to print and the exit code.
pub fn run(cli: &Cli) -> (String, u8) {
    match execute(cli) {
        Ok(o) if o.command == "canon" => (o.lines.join("\n"), 0),
        Ok(o) => {
            let text = match cli.format {
                Format::Json => o.to_json(),
                Format::Text => o.to_text(),
            };
            (text, o.verdict.exit_code())
        }
        Err(e) => {
            let msg = e.to_string();
            let text = match cli.format {
                Format::Json => error_json(command_name(&cli.command), &msg),
                Format::Text => format!("{}: input error\n{msg}\n", command_name(&cli.command)),
            };
            (text, INPUT_ERROR)
        }
    }
}
