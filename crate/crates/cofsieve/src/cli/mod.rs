//! Argument definitions; each subcommand is implemented in [`commands`].

mod commands;

use clap::{Parser, Subcommand, ValueEnum};

use cofsieve::{Basis, Composition, Error, Partition, SkewShape};

pub use commands::run;

/// Exit statuses.
pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "cofsieve", version, about = "Coinversion-free fillings, E_{lambda/mu}(x;q,0) and cyclic sieving checks")]
pub struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print E_{shape}(x_1..x_m; q, 0).
    E {
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_basis, default_value = "monomial")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a cyclic sieving statement.
    Csp {
        #[command(subcommand)]
        suite: CspSuite,
    },
    /// List the orbits of the block column rotation.
    Orbits {
        /// The base shape; the rotation acts on n times it.
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "content")]
        m: Option<usize>,
        #[arg(long, value_parser = parse_composition)]
        content: Option<Composition>,
        #[arg(long)]
        json: bool,
    },
    /// Emit the crystal graph on COF(shape, m).
    Crystal {
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Insert a Burge word (JSON or two lines, from a file or stdin) or the word of a filling.
    Rsk {
        /// File holding the word; stdin when absent or "-".
        input: Option<String>,
        /// Use the word of this filling instead, e.g. "..213/331/22/14".
        #[arg(long, conflicts_with = "input")]
        filling: Option<String>,
        /// Print every insertion step.
        #[arg(long)]
        steps: bool,
    },
    /// Recover the Burge word from an insertion tableau and a recording tableau.
    Unrsk {
        /// Insertion tableau, e.g. 1112/225/33/4.
        p: String,
        /// Recording tableau as printed by `rsk`, e.g. 1234/123/13/2.
        q: String,
    },
    /// Print the Kostka-Foulkes polynomial K_{lambda mu}(q).
    Kostka {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// Print charge or postfix charge of a word.
    Charge {
        word: String,
        /// Append a decreasing word of this content first.
        #[arg(long, value_parser = parse_partition)]
        postfix: Option<Partition>,
    },
    /// Print a vertical-strip LLT polynomial and its minimal inversion count.
    Llt {
        /// Strips as a/b pairs, e.g. 3/0,3/1,2/1,3/0.
        tuple: String,
        #[arg(long)]
        m: usize,
        /// Only print the minimal inversion count.
        #[arg(long)]
        mininv: bool,
        #[arg(long, value_parser = parse_basis, default_value = "schur")]
        basis: Basis,
    },
    /// Randomized spot checks on small shapes.
    Selfcheck {
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CspSuite {
    /// E_{n lambda}(1^m; q, 0) on COF(n lambda, m), plus the Lyndon-like check.
    Main {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// [m_nu] E_{n lambda}(x; q, 0) on the fillings of content nu.
    Refined {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_composition)]
        content: Composition,
        #[arg(long)]
        json: bool,
    },
    /// The skew version on COF(n lambda / n mu, m).
    Skew {
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Relabelling of values by a permutation given in cycle notation.
    Sigma {
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        json: bool,
    },
}

fn message(e: Error) -> String {
    e.to_string()
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(message)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(message)
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(message)
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(message)
}
