use std::io::Write;
use std::process::ExitCode;

use nonuniform_expansions::cli::{self, CliError};

fn main() -> ExitCode {
    match cli::run(std::env::args_os()) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = err.exit_code();
            match err {
                CliError::Clap(e) => {
                    let _ = e.print();
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(code as u8)
        }
    }
}
