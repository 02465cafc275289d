use clap::{Args, Parser, Subcommand};

use crate::config::{OutputMode, RunConfig, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "fricke-lab",
    version,
    about = "Trace polynomials, Fricke coordinates and number-theoretic certificates for the one-holed torus"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Working precision of interval arithmetic, in bits.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(32..))]
    pub precision_bits: u32,

    /// Largest prime used by irreducibility and cycle-type sampling.
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(2..))]
    pub prime_bound: u64,

    /// Seed for every randomized suite.
    #[arg(long, global = true, env = "FRICKE_LAB_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Terse, line-stable `key: value` output.
    #[arg(long, global = true)]
    pub machine: bool,

    /// Print interval endpoints instead of midpoint ± radius.
    #[arg(long, global = true)]
    pub raw: bool,
}

impl GlobalArgs {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            precision_bits: self.precision_bits,
            prime_bound: self.prime_bound,
            seed: self.seed,
            output: if self.machine {
                OutputMode::Machine
            } else {
                OutputMode::Text
            },
            raw: self.raw,
        }
    }
}

/// A `poly: c0 c1 ...` literal (quoted or not) or a file path.
#[derive(Debug, Args)]
pub struct PolyArg {
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true, value_name = "POLY")]
    pub poly: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace polynomial of a word, or its value at a point.
    Trace {
        word: String,
        /// `x,y,z`, `markov:x,y` or `paper`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Certified geodesic length `2 arccosh(|tr|/2)` of a word at a point.
    Length {
        word: String,
        #[arg(long)]
        point: String,
    },
    /// The eliminated quintic, cross-checked by both elimination routes.
    Quintic,
    /// Solves the pattern system and certifies the point.
    Solve,
    /// Galois certificate from cycle types mod p.
    Galois(PolyArg),
    /// Non-arithmeticity report for a minimal polynomial of a trace.
    Nonarith(PolyArg),
    /// Salem test on a palindromic polynomial.
    Salem(PolyArg),
    /// Geometric Salem test on a trace polynomial.
    Geosalem(PolyArg),
    /// `t^n h(t + 1/t)`, or the recovery of `h` with `--inverse`.
    SalemTransform {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        inverse: bool,
    },
    /// Compares trace polynomials with random SL(2, R) matrix products.
    Oracle {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
    },
    /// Trace varieties and the rigidity hypothesis.
    #[command(subcommand)]
    Variety(VarietyCommand),
    /// Reproduces the worked example end to end.
    VerifyPaper,
}

#[derive(Debug, Subcommand)]
pub enum VarietyCommand {
    /// Symbolic residual of a polynomial on a word tuple, and membership at a point.
    Check {
        #[arg(long)]
        poly: String,
        /// Comma-separated words or a word-list file.
        #[arg(long)]
        words: String,
        #[arg(long)]
        point: Option<String>,
    },
    /// Randomized symbolic check of `X1*X2 - X3 - X4` on `(u, v, uv, uv^-1)`.
    IdentitySuite {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        maxlen: usize,
        /// Alternative arity-4 polynomial to run through the same harness.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Checks the rigidity hypothesis for subset products of generators.
    #[command(name = "thmA")]
    ThmA {
        #[arg(long)]
        gens: String,
        /// `{i,j,...}:poly:...` or `{i,j,...}:file`, once per subset.
        #[arg(long, required = true)]
        minpoly: Vec<String>,
        #[arg(long)]
        point: String,
    },
}
