//! `hgx`: verify Hopf algebras, comodule algebras and Hopf-Galois data from
//! presets or JSON files. Exit status 0 when every check passes, 1 when a
//! mathematical check fails, 2 on bad input.

mod commands;
mod io;
mod report;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hopf_galois::Error;

#[derive(Parser)]
#[command(name = "hgx", version, about = "Exact checks for Hopf-Galois extensions with central invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = hopf_galois::gallery::DEFAULT_SEED)]
    seed: u64,
}

/// Where the structure under test comes from.
#[derive(Args, Clone, Debug, Default)]
pub struct Input {
    /// A named example (see the README for the list per command).
    #[arg(long)]
    pub preset: Option<String>,
    /// A JSON file instead of a preset.
    #[arg(long, conflicts_with = "preset")]
    pub file: Option<String>,
    /// Size parameter of the preset.
    #[arg(long)]
    pub n: Option<usize>,
    /// The parameter of the qzn family, an element of Q[q, q^-1].
    #[arg(long)]
    pub q: Option<String>,
    /// Base change: fiber@a, jet@a^N, restriction@a or generic.
    #[arg(long)]
    pub at: Option<String>,
    /// A group such as Z4, S3, D4 or K4.
    #[arg(long)]
    pub group: Option<String>,
    /// Work over F_p instead of Q.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms, the dual and the integrals.
    VerifyHopf {
        #[command(flatten)]
        input: Input,
        /// Include the structure as JSON in the report.
        #[arg(long)]
        dump: bool,
    },
    /// Check the comodule algebra axioms.
    VerifyComodule {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dump: bool,
    },
    /// Decide whether the canonical map is bijective.
    Galois {
        #[command(flatten)]
        input: Input,
    },
    /// Check a 2-cocycle and build its twisted product.
    Twisted {
        #[command(flatten)]
        input: Input,
        /// Multiplication rule: reversed or standard.
        #[arg(long, default_value = "reversed")]
        convention: String,
    },
    /// Search for a cleaving map.
    Cleft {
        #[command(flatten)]
        input: Input,
    },
    /// Base change of a family along --at.
    Specialize {
        #[command(flatten)]
        input: Input,
    },
    /// The Frobenius form and the Nakayama automorphism.
    Frobenius {
        #[command(flatten)]
        input: Input,
    },
    /// The Miyashita-Ulbrich action.
    Mu {
        #[command(flatten)]
        input: Input,
    },
    /// First Hochschild cohomology of a bimodule.
    Hh1 {
        #[command(flatten)]
        input: Input,
    },
    /// Trivialize a formal deformation of a module order by order.
    Trivialize {
        #[command(flatten)]
        input: Input,
        /// Truncation order N (work modulo t^N).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Properties of a connection on a family over Q[q, q^-1].
    Connections {
        #[command(flatten)]
        input: Input,
        /// Connection matrix as JSON rows of strings; defaults to d/dq.
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Hopf-Galois structures on a separable extension (Greither-Pareigis).
    Gp {
        #[arg(long)]
        group: String,
        /// Generators of the subfield group, comma separated.
        #[arg(long, default_value = "")]
        subgroup: String,
    },
    /// Glue an H-structure given on a cover.
    Glue {
        #[command(flatten)]
        input: Input,
    },
    /// Run the full acceptance suite.
    Gallery {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
        /// List every individual check.
        #[arg(long)]
        verbose: bool,
    },
}

/// Bad input rather than a failed mathematical check.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::InvalidInput(_)
            | Error::DimensionMismatch(_)
            | Error::NotASubgroup(_)
            | Error::InvalidGroupTable(_)
            | Error::DegreeTooLarge(_)
            | Error::Unsupported(_)
            | Error::UnsupportedBase(_)
            | Error::NotInDomain(_)
            | Error::NotNormalized(_)
            | Error::InvalidFamily(_)
            | Error::ModuleMismatch(_)
            | Error::StructureInvalid(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(&cli.command, cli.seed, &args) {
        Ok(report) => {
            report.print(cli.json);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
