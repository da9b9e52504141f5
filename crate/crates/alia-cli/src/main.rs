//! `alia`: command-line front end.
//!
//! Exit codes: 0 success, 2 configuration error, 3 mathematical
//! precondition violated, 4 internal inconsistency.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use alia::{Error, ErrorClass};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Decompose,
    Quotient,
    Kac,
    Wildness,
    Interpolate,
    Idealchain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

/// Automorphic Lie algebras on punctured spheres, in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "alia", version)]
pub struct Cli {
    /// Action configuration: a JSON file, or the name of a shipped preset.
    #[arg(long)]
    pub config: String,
    #[arg(long, value_enum)]
    pub command: Command,
    /// Base point, e.g. `0`, `1/2 - zeta6` or `inf`. Defaults to the config's point.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Jet order (quotient, interpolate) or largest order (idealchain).
    #[arg(long)]
    pub m: Option<usize>,
    /// Pole order: first one tried (quotient) or the truncation (idealchain).
    #[arg(long)]
    pub degree: Option<usize>,
    /// Largest n in the wildness table.
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Environment variable naming a directory for cached outputs.
pub const CACHE_ENV: &str = "ALIA_CACHE_DIR";

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Lib(e) => match e.class() {
                ErrorClass::Config => 2,
                ErrorClass::Math => 3,
                ErrorClass::Internal => 4,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Config(m) => format!("configuration error: {m}"),
            Failure::Lib(e @ Error::Unstabilized(_)) => format!("{e}; try a larger --degree"),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("alia: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let input = commands::Input::load(cli)?;
    let cache = cache::Cache::from_env();
    let key = cache::key(cli, &input.text);
    let text = match cache.as_ref().and_then(|c| c.get(&key)) {
        Some(hit) => hit,
        None => {
            let text = commands::execute(cli, &input)?;
            if let Some(c) = &cache {
                c.put(&key, &text);
            }
            text
        }
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
