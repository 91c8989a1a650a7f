use std::io;
use std::process::ExitCode;

use clap::Parser;
use vdw_sphere_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("vdw-sphere: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
