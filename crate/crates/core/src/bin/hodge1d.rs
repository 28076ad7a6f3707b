use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use dirichlet_hodge::cli::{run, Command, RunConfig, EXIT_PARSE};

/// Hodge theory, Čech cohomology and stationary flows on weighted graphs.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// One of: build, hodge, cech, capacity, neumann, ns, verify.
    #[arg(long)]
    command: String,
    /// Request document (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Result document (JSON). `hodge` and `ns` also write
    /// `<stem>.edges.csv` and `<stem>.vertices.csv` beside it.
    #[arg(long)]
    output: PathBuf,
    /// Overrides the pass threshold of the command's checks.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Seed for randomized inputs and checks.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    let command: Command = match args.command.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("hodge1d: {e}");
            return ExitCode::from(e.code as u8);
        }
    };
    let outcome = run(&RunConfig { command, input: args.input, output: args.output, tolerance: args.tolerance, seed: args.seed });
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("hodge1d: {msg}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
