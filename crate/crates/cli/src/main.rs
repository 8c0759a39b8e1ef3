use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use evoalg::{Error, Limits};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "evoalg", version, about = "Exact analysis of finite-dimensional evolution algebras")]
struct Cli {
    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of vectors a single enumeration may scan.
    #[arg(long, global = true, value_name = "N")]
    max_vectors: Option<u64>,
    /// Largest number of subspaces an all-subspace scan may produce.
    #[arg(long, global = true, value_name = "N")]
    max_subspaces: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

/// An algebra file, or a built-in family.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Algebra definition file.
    #[arg(required_unless_present = "family")]
    pub path: Option<PathBuf>,
    /// Built-in family instead of a file, e.g. `diag:3` or `z3_counterexample`.
    #[arg(long, conflicts_with = "path")]
    pub family: Option<String>,
    /// Field for `--family`.
    #[arg(long, default_value = "GF(3)")]
    pub field: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Probe {
    /// soc(A) ⊆ evsoc(A)
    SocEvsoc,
    /// simple ⇒ full-rank structure matrix
    SimpleRank,
    /// evlattice laws for the evolution-ideal poset
    Evlattice,
    /// pairs of evolution ideals whose sum is not an evolution ideal
    Breakup,
    /// algebras that are not supremum-semilatticed
    Semilatticed,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural predicates and a socle summary.
    Analyze(Input),
    /// The idempotent system and all idempotents.
    Idempotents(Input),
    /// Ideals, minimal ideals and evolution ideals.
    Ideals(Input),
    /// Socle report.
    Socle(Input),
    /// Ideal lattice or evolution-ideal poset.
    Lattice {
        #[command(flatten)]
        input: Input,
        /// Restrict to evolution ideals, with evinf/evsup tables and breakups.
        #[arg(long)]
        evolution: bool,
        /// Print a Graphviz digraph of the covering relation.
        #[arg(long)]
        dot: bool,
    },
    /// Natural bases up to permutation and scaling.
    NaturalBases(Input),
    /// Scan all structure matrices of one dimension for simple algebras without idempotents.
    FseaniScan {
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
    },
    /// Run a probe over every structure matrix of one dimension.
    Census {
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        probe: Probe,
        /// Write every hit as an algebra file into this directory.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
    /// Write a built-in example as an algebra file.
    Example {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "GF(3)")]
        field: String,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Errors reaching the user, with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Refused(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExceeded { .. } | Error::UnsupportedEnumeration | Error::Invariant(_) => {
                Failure::Refused(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::default();
    if let Some(v) = cli.max_vectors {
        limits.max_vectors = v;
    }
    if let Some(s) = cli.max_subspaces {
        limits.max_subspaces = s;
    }
    let result = match cli.command {
        Command::Analyze(input) => commands::analyze(&input, &limits),
        Command::Idempotents(input) => commands::idempotents(&input, &limits),
        Command::Ideals(input) => commands::ideals(&input, &limits),
        Command::Socle(input) => commands::socle(&input, &limits),
        Command::Lattice { input, evolution, dot } => commands::lattice(&input, evolution, dot, &limits),
        Command::NaturalBases(input) => commands::natural_bases(&input, &limits),
        Command::FseaniScan { field, dim } => commands::fseani(&field, dim, &limits),
        Command::Census {
            field,
            dim,
            probe,
            fixtures,
        } => commands::census(&field, dim, probe, fixtures.as_deref(), &limits),
        Command::Example { family, field, output } => commands::example(&family, &field, output.as_deref()),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("json"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Refused(m)) => {
            eprintln!("refused: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
