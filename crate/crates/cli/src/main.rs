mod args;
mod commands;
mod inputs;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

const USAGE_ERROR: u8 = 64;
const DATA_ERROR: u8 = 65;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.payload).expect("payload serializes")
            } else {
                outcome.text
            };
            // A closed pipe (`brouwer enumerate | head`) is not an error.
            if !text.is_empty() {
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            ExitCode::from(outcome.code)
        }
        Err(inputs::DataError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(DATA_ERROR)
        }
    }
}
