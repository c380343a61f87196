use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homfly_core::invariants::KnotId;
use num_rational::Ratio;

use crate::parse::{parse_knot, parse_m, parse_range, NRange};

#[derive(Parser, Debug)]
#[command(name = "homfly", version, about = "Colored HOMFLY polynomials and volume-conjecture sequences")]
pub struct Cli {
    /// Worker threads for the numeric sums (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced colored HOMFLY polynomial.
    Invariant {
        #[arg(long, value_parser = parse_knot)]
        knot: KnotId,
        #[arg(long)]
        n: i32,
        #[command(flatten)]
        out: Output,
    },
    /// Value at the root of unity for (M, N).
    Evaluate {
        #[arg(long, value_parser = parse_knot)]
        knot: KnotId,
        #[arg(long = "M", value_parser = parse_m)]
        m: Ratio<i64>,
        #[arg(long = "N")]
        big_n: u32,
        #[command(flatten)]
        prec: Precision,
        #[command(flatten)]
        out: Output,
    },
    /// The (x, y) sequence over a range of N.
    Asympt {
        #[arg(long, value_parser = parse_knot)]
        knot: KnotId,
        #[arg(long = "M", value_parser = parse_m)]
        m: Ratio<i64>,
        /// from:to:step
        #[arg(long = "N-range", value_parser = parse_range)]
        range: NRange,
        #[command(flatten)]
        prec: Precision,
        #[command(flatten)]
        out: Output,
    },
    /// x on the M_k grid, k = 1..divisions-1.
    Grid {
        #[arg(long, value_parser = parse_knot)]
        knot: KnotId,
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long, default_value_t = 12)]
        divisions: u32,
        #[command(flatten)]
        prec: Precision,
        #[command(flatten)]
        out: Output,
    },
    /// Samples of f(x) = 4 ∫_{πx}^{5π/6} log(2 sin t) dt.
    Integral {
        #[arg(long, value_parser = parse_m, default_value = "0")]
        from: Ratio<i64>,
        #[arg(long, value_parser = parse_m, default_value = "5/6")]
        to: Ratio<i64>,
        #[arg(long, default_value_t = 100)]
        steps: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Uncolored HOMFLY polynomial of a committed diagram fixture.
    Oracle {
        #[arg(long)]
        fixture: String,
        #[command(flatten)]
        out: Output,
    },
    /// Prints one of the skein coefficients.
    Debug {
        #[arg(value_enum)]
        what: DebugItem,
        /// Integer indices, in the order of the coefficient's arguments.
        #[arg(allow_negative_numbers = true)]
        args: Vec<i32>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DebugItem {
    /// [n]
    Qint,
    /// [n;a]
    Framed,
    /// n k base
    Gauss,
    /// m n i
    Alpha,
    /// i j k m n
    Beta,
    /// i j k l
    Gamma,
    /// l1 l2 i j k
    C,
    /// m n
    S,
}

#[derive(Args, Debug)]
pub struct Precision {
    /// Starting precision in bits (default grows with N).
    #[arg(long, env = "HOMFLY_PREC")]
    pub prec: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
