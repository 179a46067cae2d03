//! Calculator and benchmark front-end for hereditarily binary numbers.

pub mod bench;
pub mod error;
pub mod expr;
pub mod format;

pub use bench::Scenario;
pub use error::CliError;
pub use expr::{evaluate, Value};
pub use format::{render, Format};

/// Evaluates `src` and renders the result.
pub fn eval_command(src: &str, format: Format, decimal_bit_budget: u64) -> Result<String, CliError> {
    render(&evaluate(src)?, format, decimal_bit_budget)
}
