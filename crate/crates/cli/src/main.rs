//! `hopfcyc`: batch checks and cohomology tables for Hopf algebras with a
//! modular character.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! parse or usage error (no report is written then).

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand as ClapSubcommand};
use hopf_cyclic::cohomology::Method;

use commands::{run, RunConfig, Subcommand};

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact Hopf cyclic cohomology checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Hopf axioms, twisted antipode properties and the involution test.
    CheckHopf(Common),
    /// The cyclic-category relations up to the given degree.
    CyclicRelations(Common),
    /// Hochschild and cyclic cohomology dimensions.
    Cohomology(Common),
    /// Pairing of an idempotent with a trace cocycle, under conjugation.
    Pair(Common),
    /// The characteristic map into algebra cochains.
    GammaCheck {
        #[command(flatten)]
        common: Common,
        /// Algebra with action and trace
        #[arg(long, value_name = "PATH")]
        action: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_name = "NAME", default_value = "epsilon")]
    character: String,
    /// Defaults to 4, or 3 for gamma-check
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: Option<u64>,
    #[arg(long, default_value = "both", value_parser = parse_method)]
    method: Method,
    #[arg(long, value_name = "S", default_value_t = 0)]
    seed: u64,
    /// Count a failing involution test as a failed check
    #[arg(long)]
    require_involution: bool,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Timing on stderr
    #[arg(short, long)]
    verbose: bool,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: hopf_cyclic::Error| e.to_string())
}

impl Common {
    fn config(self, subcommand: Subcommand, action: Option<PathBuf>, default_degree: usize) -> RunConfig {
        RunConfig {
            subcommand,
            input: self.input,
            action,
            character: self.character,
            max_degree: self.max_degree.map_or(default_degree, |n| n as usize),
            method: self.method,
            seed: self.seed,
            require_involution: self.require_involution,
            output: self.output,
            verbose: self.verbose,
        }
    }
}

fn main() -> ExitCode {
    let config = match Cli::parse().command {
        Command::CheckHopf(c) => c.config(Subcommand::CheckHopf, None, 4),
        Command::CyclicRelations(c) => c.config(Subcommand::CyclicRelations, None, 4),
        Command::Cohomology(c) => c.config(Subcommand::Cohomology, None, 4),
        Command::Pair(c) => c.config(Subcommand::Pair, None, 4),
        Command::GammaCheck { common, action } => common.config(Subcommand::GammaCheck, Some(action), 3),
    };
    let start = Instant::now();
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("hopfcyc: {e}");
            return ExitCode::from(2);
        }
    };
    if config.verbose {
        eprintln!("hopfcyc: {:?} finished in {:.2?}", config.subcommand, start.elapsed());
    }
    match &config.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.report) {
                eprintln!("hopfcyc: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.report),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
