use std::cmp::Ordering;

use hbn::{bitsize, block_count, describe, render_tree, succ, to_natural_with_budget, tsize, Hbn};

use crate::error::CliError;
use crate::expr::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Decimal,
    Tree,
    Stats,
}

/// Renders a value without a trailing newline. Orderings print as `<`,
/// `=`, `>` in every format.
pub fn render(value: &Value, format: Format, decimal_bit_budget: u64) -> Result<String, CliError> {
    let x = match value {
        Value::Ord(o) => {
            return Ok(match o {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            }
            .to_string())
        }
        Value::Num(x) => x,
    };
    match format {
        Format::Decimal => Ok(to_natural_with_budget(x, decimal_bit_budget)?.to_string()),
        Format::Tree => Ok(render_tree(x)),
        Format::Stats => Ok(stats(x)),
    }
}

fn stats(x: &Hbn) -> String {
    let parity = match x {
        Hbn::E => "zero",
        Hbn::V(_) => "odd",
        Hbn::W(_) => "even",
    };
    let leading = match x.split() {
        Some((_, count, _)) => describe(&succ(count)),
        None => "0".into(),
    };
    format!(
        "bitsize: {}\ntsize: {}\nparity: {}\nblocks: {}\nleading_block: {}",
        describe(&bitsize(x)),
        describe(&tsize(x)),
        parity,
        describe(&block_count(x)),
        leading
    )
}
