//! Front end of the `onecyl` binary: argument parsing, subcommands and
//! uniform text, TSV and JSON reports.

pub mod commands;
pub mod config;
pub mod exit;
pub mod reference;
pub mod report;

pub use config::{Cli, Command, Format, GlobalOptions, RunConfig};
pub use exit::{classify, CliError, ExitClass};
pub use report::Report;

/// Runs a parsed command, on a dedicated pool when `--threads` is given.
pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    match cli.options.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Unsupported(format!("thread pool: {e}")))?;
            pool.install(|| commands::execute(cli))
        }
        None => commands::execute(cli),
    }
}
