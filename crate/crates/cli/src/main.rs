use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = densecap_cli::Cli::parse();
    match densecap_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
