use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hbn::{Natural, DEFAULT_BIT_BUDGET};
use hbn_cli::{bench, eval_command, CliError, Format, Scenario};

#[derive(Parser)]
#[command(name = "hbn", version, about = "Hereditarily binary number calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for eval
    #[arg(long, global = true, value_enum, default_value_t = Format::Stats)]
    format: Format,

    /// Largest bitsize printed in decimal
    #[arg(long, global = true, default_value_t = DEFAULT_BIT_BUDGET)]
    decimal_bit_budget: u64,

    /// Seed for bench randomness
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression
    Eval { expr: String },
    /// Run a benchmark scenario (scale 0 picks the default)
    Bench {
        #[arg(value_enum)]
        scenario: Scenario,
        #[arg(default_value = "0")]
        scale: Natural,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (result, source) = match &cli.command {
        Command::Eval { expr } => (
            eval_command(expr, cli.format, cli.decimal_bit_budget),
            Some(expr.as_str()),
        ),
        Command::Bench { scenario, scale } => (bench::run(*scenario, scale, cli.seed), None),
    };
    match result {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let (CliError::Parse { pos, .. }, Some(src)) = (&e, source) {
                eprintln!("  {src}\n  {}^", " ".repeat(*pos));
            }
            ExitCode::from(e.exit_code())
        }
    }
}
