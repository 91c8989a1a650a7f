//! Command-line front end for [`vdw_sphere`].
//!
//! Every command builds a [`output::Table`] and serializes it as CSV or JSON.
//! Inputs and outputs cross the unit boundary here; the library only ever sees
//! reduced units.

pub mod args;
mod commands;
pub mod output;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

pub use args::Cli;
pub use commands::{execute, Outcome};

/// Environment variable that relocates relative `--output` paths.
pub const OUT_DIR_ENV: &str = "VDW_SPHERE_OUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or parameters. Exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<vdw_sphere::Error> for CliError {
    fn from(e: vdw_sphere::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

fn output_path(cli: &Cli) -> Option<PathBuf> {
    let path = cli.common.output.clone()?;
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Some(PathBuf::from(dir).join(path)),
        _ => Some(path),
    }
}

/// Runs `cli`, writing to `--output` or to `stdout`, and returns the exit code.
pub fn run<W: Write>(cli: &Cli, stdout: &mut W) -> Result<u8, CliError> {
    let outcome = execute(cli)?;
    match output_path(cli) {
        Some(path) => {
            let mut file = BufWriter::new(File::create(&path)?);
            outcome.table.write(&mut file, cli.common.format)?;
            file.flush()?;
        }
        None => outcome.table.write(stdout, cli.common.format)?,
    }
    Ok(if outcome.success { 0 } else { 1 })
}
