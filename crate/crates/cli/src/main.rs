use std::process::ExitCode;

use clap::Parser;
use sporbits_cli::{commands, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    match &result {
        Ok(outcome) => println!("{}", outcome.output),
        Err(err) => eprintln!("error: {err:#}"),
    }
    ExitCode::from(commands::exit_code(&result))
}
