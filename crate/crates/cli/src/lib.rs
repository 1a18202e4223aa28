//! Command implementations behind the `hopfnf` binary.
//!
//! Every command returns its text and exit code instead of printing, so the
//! binary stays a thin wrapper and the commands can be tested in process.

pub mod checks;
mod commands;
mod error;
pub mod input;
pub mod report;

pub use commands::{bt_reduce, classify_cmd, example, normalize, verify, Options, Outcome, OutputFormat};
pub use error::CliError;
pub use input::InputDocument;
pub use report::PipelineReport;

/// Runs `f` and folds an error into its exit code and message.
pub fn run(f: impl FnOnce() -> Result<Outcome, CliError>) -> Outcome {
    match f() {
        Ok(o) => o,
        Err(e) => Outcome { text: format!("error: {e}\n"), code: e.exit_code() },
    }
}
