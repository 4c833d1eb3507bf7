use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use onecyl::{classify, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render().as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(classify(&e).code() as u8)
        }
    }
}
