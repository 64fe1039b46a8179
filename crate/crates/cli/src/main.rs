use std::process::ExitCode;

use clap::Parser;
use pmech_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(&cli.command, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pmech: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
