//! Command-line front end: argument definitions, configuration, report
//! types and the command implementations behind the `sporbits` binary.

pub mod commands;
pub mod config;
pub mod input;
pub mod reports;
pub mod verify_all;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
    /// Graphviz; only `poset` renders it, other commands fall back to text.
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "sporbits", version, about = "Symplectic orbit closures on the flag manifold")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Args)]
pub struct Global {
    /// TOML file with defaults for any of the flags below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for every randomized check.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for batch runs.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest half-size accepted by exhaustive enumeration.
    #[arg(long, global = true)]
    pub max_half_size: Option<usize>,
    /// S-pair cap for Gröbner computations.
    #[arg(long, global = true)]
    pub max_pairs: Option<usize>,
    /// Degree cap for Gröbner computations.
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    /// Wall-time cap for Gröbner computations, in seconds.
    #[arg(long, global = true)]
    pub max_time_secs: Option<u64>,
    /// Raise all Gröbner caps tenfold and allow size-6 degenerations.
    #[arg(long, global = true)]
    pub deep: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every fixed-point-free involution of {1..2n}.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Hasse diagram of the opposite Bruhat order (JSON or DOT).
    Poset {
        #[arg(long)]
        n: usize,
    },
    /// ASCII arc diagram.
    Wiring {
        #[arg(long)]
        iota: String,
    },
    /// Symplectic essential set.
    Boxes {
        #[arg(long)]
        iota: String,
    },
    /// Decomposition into basic elements, with the meet checked.
    Basics {
        #[arg(long)]
        iota: String,
    },
    /// Minimal-length conjugators of the standard involution.
    Pairperms {
        #[arg(long)]
        iota: String,
    },
    /// Run the invariant suite over every size up to `n`.
    VerifyAll {
        #[arg(long)]
        n: usize,
    },
    /// Compare the two initial ideals for a catalogued involution.
    VerifyDegeneration {
        #[arg(long)]
        iota: String,
    },
    /// Check that the Fulton minors form a Gröbner basis antidiagonally.
    VerifyKm {
        #[arg(long)]
        pi: String,
    },
    /// Orbit of a matrix given as a JSON array of rational strings.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Catalogued generators of an orbit-closure ideal.
    OrbitIdeal {
        #[arg(long)]
        iota: String,
    },
    /// Reduced Gröbner basis of an ideal file.
    Groebner {
        /// JSON list of polynomial strings, or `{"vars": .., "generators": ..}`.
        #[arg(long)]
        ideal: PathBuf,
        /// `grevlex`, `lex`, `antidiagonal`, `weight`, or a JSON term order.
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
}
