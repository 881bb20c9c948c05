//! `bordismkit`: command-line front end for bordism-core.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bordism_core::Error;

#[derive(Parser, Debug)]
#[command(name = "bordismkit", version, about = "Fixed-point polynomials, colored polytopes and torus graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Gf2,
    #[value(name = "z-ext")]
    ZExt,
}

/// A JSON document: a file path, inline JSON, or `-` for standard input.
#[derive(Args, Debug)]
pub struct Input {
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Dimension of the kernel of `d ∘ dual` in rank `n`.
    Dim {
        #[arg(long)]
        n: usize,
        /// `z-ext` reports the rank of the weight-bounded unitary window.
        #[arg(long, value_enum, default_value_t = RingArg::Gf2)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        weight_bound: i64,
    },
    /// Whether a primal polynomial is the tangent data of an action.
    Check(Input),
    /// Dual polynomial.
    Dual(Input),
    /// Image under the differential `d`.
    Diff(Input),
    /// Coloring polynomial of a `GF(2)`-colored polytope.
    PolyOfPolytope(Input),
    /// Coloring polynomial of a colored graph.
    PolyOfGraph(Input),
    /// Polynomial of a torus graph or of a quasitoric pair.
    TorusPoly {
        #[command(flatten)]
        input: Input,
        /// Orient a graph given without `sigma`.
        #[arg(long)]
        orient: bool,
    },
    /// Equivariant Chern numbers of fixed-point data or a unitary polynomial.
    Chern {
        #[command(flatten)]
        input: Input,
        #[arg(long, requires = "j")]
        i: Option<u32>,
        #[arg(long, requires = "i")]
        j: Option<u32>,
        /// Largest `i + 2j` tabulated; defaults to `2n`.
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Mod-2 reduction of a unitary class.
    Reduce(Input),
    /// Generalized real Bott generators in rank `n` and the rank of their span.
    Generators {
        #[arg(long)]
        n: usize,
    },
    /// Runs the bundled acceptance suite.
    Verify {
        /// Run only these criteria (1 to 10).
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=10))]
        criteria: Vec<u8>,
        #[arg(long, default_value_t = bordism_core::verify::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            print!("{}", commands::error_document(&e));
            ExitCode::from(if matches!(e, Error::Malformed(_)) { 2 } else { 1 })
        }
    }
}
