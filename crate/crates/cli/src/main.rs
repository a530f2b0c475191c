use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use ecodim::error::Error;

mod commands;
mod render;

#[derive(Parser)]
#[command(
    name = "ecodim",
    version,
    about = "Expected codimension of matroids and positroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Expected codimension of a matroid, optionally over named families.
    Ec {
        input: PathBuf,
        /// `powerset`, `flacets`, `intervals` or `file:<path>`; repeatable.
        #[arg(long = "family")]
        families: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Summary report: structure, ec, positroid data and the s-polynomial digest.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Positroids from permutations or interval ranks.
    Positroid {
        #[command(subcommand)]
        command: PositroidCommand,
    },
    /// The trivariate polynomial s_M.
    Spoly {
        input: PathBuf,
        /// Also compare the mixed derivative of s_M with ec; exit 1 on mismatch.
        #[arg(long)]
        check_ec: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Tutte polynomial t_M(x, y) = s_M(x − 1, y − 1, 0).
    Tutte {
        input: PathBuf,
        /// Evaluate at `x,y` instead of printing the polynomial.
        #[arg(long, value_name = "X,Y")]
        eval: Option<String>,
        /// Use the corank-nullity convention (variables exchanged).
        #[arg(long)]
        standard: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run a named verification suite; exit 1 if any check fails.
    Verify {
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
        /// Subdivision witness for the valuation suite.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum PositroidCommand {
    /// From a window such as `3,6,5,8,7,10`.
    Perm {
        window: String,
        #[command(flatten)]
        out: Output,
    },
    /// From a file of interval rank bounds (or any positroid input file).
    Ranks {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// ec = length over all bounded affine permutations up to `--n`, plus samples.
    Verify {
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// What a command hands back: the report and whether every check held.
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AxiomViolation { .. } => 3,
        Error::NotPositroid => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match cli.command {
        Command::Ec {
            input,
            families,
            out,
        } => (commands::ec(&input, &families), out),
        Command::Analyze { input, out } => (commands::analyze(&input), out),
        Command::Positroid { command } => match command {
            PositroidCommand::Perm { window, out } => (commands::positroid_perm(&window), out),
            PositroidCommand::Ranks { input, out } => (commands::positroid_ranks(&input), out),
            PositroidCommand::Verify { bounds, out } => (
                commands::positroid_verify(bounds.n, bounds.samples, bounds.seed),
                out,
            ),
        },
        Command::Spoly {
            input,
            check_ec,
            out,
        } => (commands::spoly(&input, check_ec), out),
        Command::Tutte {
            input,
            eval,
            standard,
            out,
        } => (commands::tutte(&input, eval.as_deref(), standard), out),
        Command::Verify {
            suite,
            bounds,
            witness,
            out,
        } => (
            commands::verify(
                &suite,
                bounds.n,
                bounds.samples,
                bounds.seed,
                witness.as_deref(),
            ),
            out,
        ),
    };
    match result {
        Ok(outcome) => {
            if out.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("reports serialize")
                );
            } else {
                print!("{}", render::text(&outcome.report));
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
