mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kminv::topology::DEFAULT_LENGTH_CUTOFF;
use kminv::CartanMatrix;

use crate::error::{CliError, Code, EXIT_CODE_HELP};

const DEFAULT_INVARIANT_DEGREE: u32 = 6;

#[derive(Parser)]
#[command(name = "kminv", version, about = "Invariants, subalgebras and Poincaré series of generalized Cartan matrices")]
#[command(after_help = EXIT_CODE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Matrix file: JSON {"n": .., "a": [[..]]} or a whitespace/comma grid.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Degree cutoff. Polynomial degree for invariants/verify (default 6);
    /// cohomological degree for poincare/cohomology (default twice the length cutoff).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: Option<u32>,

    /// Weyl group length cutoff for Poincaré series.
    #[arg(long, global = true, default_value_t = DEFAULT_LENGTH_CUTOFF, value_parser = parse_positive)]
    max_length: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for the randomized checks in verify.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Finite/affine/indefinite type of each indecomposable block.
    Classify,
    /// The symmetrizer d with a_ij d_j = a_ji d_i, if any.
    Symmetrize,
    /// Bases of the invariant polynomials of each degree.
    Invariants,
    /// Cycle labeling and Cartan matrix B of the regular subalgebra.
    Subalgebra,
    /// Flag manifold and group Poincaré series with generator counts.
    Poincare,
    /// Rational cohomology presentations of F(A) and G(A).
    Cohomology,
    /// Run every applicable check; exits 1 if any fails.
    Verify,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn load(cli: &Cli) -> Result<CartanMatrix, CliError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| CliError::new(Code::Io, "no input file given (use --input FILE)"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(Code::Io, format!("{}: {e}", path.display())))?;
    Ok(CartanMatrix::parse(&text)?)
}

fn run(cli: &Cli) -> Result<commands::Output, CliError> {
    let a = load(cli)?;
    let cohomological = cli.max_degree.unwrap_or(2 * cli.max_length as u32);
    let polynomial = cli.max_degree.unwrap_or(DEFAULT_INVARIANT_DEGREE);
    match cli.command {
        Command::Classify => Ok(commands::classify(&a)),
        Command::Symmetrize => Ok(commands::symmetrize(&a)),
        Command::Invariants => commands::invariants(&a, polynomial),
        Command::Subalgebra => commands::subalgebra(&a),
        Command::Poincare => commands::poincare(&a, cli.max_length, cohomological),
        Command::Cohomology => commands::cohomology(&a, cli.max_length, cohomological),
        Command::Verify => commands::verify(&a, polynomial, cli.max_length, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            if out.failed {
                ExitCode::from(Code::VerificationFailed as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
