//! Thin command-line front end over the `realpoints` library.

use clap::{Args, Parser, Subcommand};
use realpoints::cli::{run, JobCommand, JobConfig};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "realpoints",
    about = "Certified sample points on smooth real algebraic sets, with bi-homogeneous Bezout bound calculators",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Seed for all random choices; fixed default keeps runs reproducible.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Box width as an exact fraction p/q.
    #[arg(long, default_value = "1/1048576")]
    width: String,
    /// Assert that the input polynomials form a regular sequence.
    #[arg(long)]
    regular: bool,
    /// Also write the output to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Process fiber depths in parallel.
    #[arg(long)]
    parallel: bool,
    /// Cross-check elimination against the full-system slicing route.
    #[arg(long = "cross-check")]
    cross_check: bool,
    /// Progress chatter on stderr.
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Sample at least one certified point per connected component.
    Sample {
        /// Input system (.sys: `vars:` header plus one polynomial per line).
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print the bound family for a degree pattern.
    Bound {
        /// Degrees of the input polynomials, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        degrees: Vec<u32>,
        /// Ambient variable count.
        #[arg(long, required = true)]
        n: usize,
        /// Number of polynomials (defaults to the degree count).
        #[arg(long)]
        s: Option<usize>,
        /// Variety dimension (defaults to n - s).
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Bi-degrees of a bi-homogeneous system via both routes.
    Bidegree {
        /// Input system over the extended ring (X block first, then L).
        input: PathBuf,
        /// Affine X-block size: the first n + 1 variables form the X block.
        #[arg(long, required = true)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert bi-series table and canonical form.
    Biseries {
        input: PathBuf,
        #[arg(long, required = true)]
        n: usize,
        /// Fixed window size (defaults to the adaptive policy).
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the critical-point projection system for an input.
    Lagrange {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn main() {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Command::Sample { input, common } => (JobCommand::Sample { input }, common),
        Command::Bound { degrees, n, s, d, common } => {
            (JobCommand::Bound { degrees, n, s, d }, common)
        }
        Command::Bidegree { input, n, common } => (JobCommand::Bidegree { input, n }, common),
        Command::Biseries { input, n, d, common } => {
            (JobCommand::Biseries { input, n, window: d }, common)
        }
        Command::Lagrange { input, common } => (JobCommand::Lagrange { input }, common),
    };
    let config = JobConfig {
        command,
        seed: common.seed,
        width: common.width,
        regular: common.regular,
        out: common.out,
        parallel: common.parallel,
        cross_check: common.cross_check,
        verbosity: common.verbose,
    };
    std::process::exit(run(&config));
}
