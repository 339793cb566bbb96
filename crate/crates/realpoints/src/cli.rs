//! Command-line job execution, kept in the library so the whole surface is
//! testable without spawning the binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 hypothesis-violation
//! diagnostic (generic retries exhausted, which signals that the smoothness
//! or radicality assumptions on the input do not hold).

use crate::bihom::{
    bezout_bound, betti_bound, bidegree_by_slicing, canonical_form_auto, critical_bound,
    hilbert_biseries, specialize_to_hilbert_series, thom_milnor_bound, BihomError, BoundInputs,
};
use crate::groebner::{dimension, groebner_basis, MonomialOrder};
use crate::lagrange::{build_projection_system, InputSystem};
use crate::poly::{BiDegree, BlockSplit, LinearChange, Polynomial};
use crate::report::render_sample_report;
use crate::rng::SeedSource;
use crate::sampler::{sample_real_points_opts, SampleError, SampleOptions};
use crate::sysfile::{parse_system, render_system, SystemFile};
use num_rational::BigRational;
use std::fmt::Write as _;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Clone, Debug)]
pub enum JobCommand {
    /// Run the sampling pipeline on a `.sys` file.
    Sample { input: PathBuf },
    /// Print the bound family for (degrees, n, s).
    Bound {
        degrees: Vec<u32>,
        n: usize,
        s: Option<usize>,
        d: Option<usize>,
    },
    /// Bi-degrees of a bi-homogeneous system by both routes.
    Bidegree { input: PathBuf, n: usize },
    /// Hilbert bi-series table and canonical form.
    Biseries { input: PathBuf, n: usize, window: Option<usize> },
    /// Print the constructed projection system.
    Lagrange { input: PathBuf },
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: JobCommand,
    pub seed: u64,
    pub width: String,
    pub regular: bool,
    pub out: Option<PathBuf>,
    pub parallel: bool,
    pub cross_check: bool,
    pub verbosity: u8,
}

impl JobConfig {
    pub fn new(command: JobCommand) -> Self {
        JobConfig {
            command,
            seed: 42,
            width: "1/1048576".to_string(),
            regular: false,
            out: None,
            parallel: false,
            cross_check: false,
            verbosity: 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Hypothesis(_) => 2,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn read_system(path: &PathBuf) -> Result<SystemFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {}", path.display(), e)))?;
    parse_system(&text).map_err(usage)
}

fn parse_width(s: &str) -> Result<BigRational, CliError> {
    let w: BigRational = s
        .parse()
        .map_err(|_| usage(format!("bad width `{}`, expected p/q", s)))?;
    if w <= BigRational::from_integer(0.into()) {
        return Err(usage("width must be positive"));
    }
    Ok(w)
}

// Splits an extended-ring system file into blocks: the first n + 1
// variables form the X block (homogenizer first), the rest the L block.
fn block_split_for(sys: &SystemFile, n: usize) -> Result<BlockSplit, CliError> {
    let names = sys.ring.var_names();
    if names.len() < n + 2 {
        return Err(usage(format!(
            "need at least n + 2 = {} variables (X block then L block), got {}",
            n + 2,
            names.len()
        )));
    }
    let x: Vec<String> = names[..=n].to_vec();
    let l: Vec<String> = names[n + 1..].to_vec();
    Ok(BlockSplit::new_homogenized(x, l))
}

fn sample_error(e: SampleError) -> CliError {
    match &e {
        SampleError::HypothesisViolation { .. } => CliError::Hypothesis(e.to_string()),
        SampleError::Solve(crate::sampler::SolveError::SeparationFailed { .. }) => {
            CliError::Hypothesis(e.to_string())
        }
        _ => usage(e),
    }
}

fn run_sample(config: &JobConfig, input: &PathBuf) -> Result<String, CliError> {
    let sys = read_system(input)?;
    let width = parse_width(&config.width)?;
    let system = InputSystem::new(sys.polys.clone(), config.regular, true).map_err(usage)?;
    if config.verbosity > 0 {
        eprintln!(
            "sampling {} ({} equations, {} variables, seed {})",
            input.display(),
            system.s(),
            system.n(),
            config.seed
        );
    }
    let options = SampleOptions { parallel: config.parallel, cross_check: config.cross_check };
    let report = sample_real_points_opts(&system, config.seed, &width, options)
        .map_err(sample_error)?;
    Ok(render_sample_report(&report, &sys.ring))
}

fn run_bound(
    config: &JobConfig,
    degrees: &[u32],
    n: usize,
    s: Option<usize>,
    d: Option<usize>,
) -> Result<String, CliError> {
    if degrees.is_empty() {
        return Err(usage("--degrees requires at least one degree"));
    }
    let s = s.unwrap_or(degrees.len());
    if s != degrees.len() {
        return Err(usage(format!(
            "--s {} disagrees with {} degrees given",
            s,
            degrees.len()
        )));
    }
    if s >= n {
        return Err(usage(format!("need s <= n - 1, got s = {}, n = {}", s, n)));
    }
    let dmax = *degrees.iter().max().unwrap();
    let dim = d.unwrap_or(n - s);
    let mut out = String::new();
    let _ = writeln!(out, "realpoints bounds v1");
    let _ = writeln!(out, "n: {}", n);
    let _ = writeln!(out, "s: {}", s);
    let _ = writeln!(
        out,
        "degrees: {}",
        degrees.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(out, "regular: {}", config.regular);
    let _ = writeln!(out, "d: {}", dim);

    // the bi-homogenized critical system: s rows (D_i, 0), plus gradient
    // rows (D-1, 1); the regular variant drops one multiplier
    let rows = if config.regular { n - 1 } else { n };
    let k = if config.regular { s - 1 } else { s };
    let mut bids: Vec<BiDegree> = degrees.iter().map(|&x| BiDegree::new(x, 0)).collect();
    bids.extend(std::iter::repeat_n(BiDegree::new(dmax - 1, 1), rows));
    match BoundInputs::new(n, k, bids).map(|inputs| bezout_bound(&inputs)) {
        Ok(b) => {
            let _ = writeln!(out, "bezout-bound: {}", b);
        }
        Err(e) => {
            let _ = writeln!(out, "bezout-bound: n/a ({})", e);
        }
    }
    let crit = critical_bound(degrees, n, config.regular).map_err(usage)?;
    let _ = writeln!(out, "critical-bound: {}", crit);
    let _ = writeln!(out, "betti-bound: {}", betti_bound(degrees, n, dim, config.regular));
    let _ = writeln!(out, "thom-milnor-bound: {}", thom_milnor_bound(dmax, n));
    Ok(out)
}

fn bihom_error(e: BihomError) -> CliError {
    match e {
        BihomError::SliceRetriesExhausted { .. } => CliError::Hypothesis(e.to_string()),
        other => usage(other),
    }
}

fn run_bidegree(config: &JobConfig, input: &PathBuf, n: usize) -> Result<String, CliError> {
    let sys = read_system(input)?;
    let split = block_split_for(&sys, n)?;
    let gb = groebner_basis(&sys.polys, MonomialOrder::DegRevLex);
    let dim = dimension(&gb);
    let (_, cf) = canonical_form_auto(&sys.ring, &sys.polys, &split, dim).map_err(bihom_error)?;
    let seeds = SeedSource::new(config.seed);
    let mut out = String::new();
    let _ = writeln!(out, "realpoints bidegree report v1");
    let _ = writeln!(out, "vars: {}", sys.ring.var_names().join(" "));
    let _ = writeln!(out, "n: {}", split.x_vars().len() - 1);
    let _ = writeln!(out, "k: {}", split.l_vars().len() - 1);
    let _ = writeln!(out, "dimension: {}", dim);
    for (&(d, e), &c) in &cf.c {
        let mut rng = seeds.stream("bidegree-slice", (d as u64) << 16 | e as u64);
        let sliced =
            bidegree_by_slicing(&sys.ring, &sys.polys, &split, d, e, &mut rng).map_err(bihom_error)?;
        let agree = c >= 0 && sliced == c as usize;
        let _ = writeln!(
            out,
            "C[{},{}]: canonical {} slicing {} {}",
            d,
            e,
            c,
            sliced,
            if agree { "agree" } else { "DISAGREE" }
        );
    }
    let _ = writeln!(out, "strong-bidegree: {}", cf.c.values().sum::<i64>());
    Ok(out)
}

fn run_biseries(
    config: &JobConfig,
    input: &PathBuf,
    n: usize,
    window: Option<usize>,
) -> Result<String, CliError> {
    let _ = config;
    let sys = read_system(input)?;
    let split = block_split_for(&sys, n)?;
    let gb = groebner_basis(&sys.polys, MonomialOrder::DegRevLex);
    let dim = dimension(&gb);
    let mut out = String::new();
    let _ = writeln!(out, "realpoints biseries report v1");
    let _ = writeln!(out, "vars: {}", sys.ring.var_names().join(" "));
    let _ = writeln!(out, "dimension: {}", dim);
    let (table, cf) = if let Some(w) = window {
        let table = hilbert_biseries(&sys.ring, &sys.polys, &split, w, w).map_err(bihom_error)?;
        let cf = crate::bihom::canonical_form(&table, dim).map_err(bihom_error)?;
        (table, cf)
    } else {
        canonical_form_auto(&sys.ring, &sys.polys, &split, dim).map_err(bihom_error)?
    };
    let _ = writeln!(out, "window: {} {}", table.imax(), table.jmax());
    for i in 0..=table.imax() {
        let row: Vec<String> = (0..=table.jmax()).map(|j| table.dim(i, j).to_string()).collect();
        let _ = writeln!(out, "row[{}]: {}", i, row.join(" "));
    }
    let h = specialize_to_hilbert_series(&table, table.imax().min(table.jmax()))
        .map_err(bihom_error)?;
    let _ = writeln!(
        out,
        "hilbert-specialized: {}",
        h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    );
    for (&(d, e), &c) in &cf.c {
        let _ = writeln!(out, "C[{},{}]: {}", d, e, c);
    }
    for (&(i, j), &c) in &cf.lower {
        let _ = writeln!(out, "c[{},{}]: {}", i, j, c);
    }
    let q: Vec<String> = cf.q.iter().map(|(&(i, j), &c)| format!("{}*t1^{}*t2^{}", c, i, j)).collect();
    let _ = writeln!(out, "Q: {}", if q.is_empty() { "0".to_string() } else { q.join(" + ") });
    Ok(out)
}

fn run_lagrange(config: &JobConfig, input: &PathBuf) -> Result<String, CliError> {
    let sys = read_system(input)?;
    let system = InputSystem::new(sys.polys.clone(), config.regular, true).map_err(usage)?;
    let built = build_projection_system(&system, &LinearChange::identity(system.n()))
        .map_err(usage)?;
    let polys: Vec<Polynomial> = built.polys().to_vec();
    Ok(render_system(built.ring(), &polys))
}

/// Runs a job, returning the structured text output.
pub fn execute(config: &JobConfig) -> Result<String, CliError> {
    match &config.command {
        JobCommand::Sample { input } => run_sample(config, input),
        JobCommand::Bound { degrees, n, s, d } => run_bound(config, degrees.as_slice(), *n, *s, *d),
        JobCommand::Bidegree { input, n } => run_bidegree(config, input, *n),
        JobCommand::Biseries { input, n, window } => run_biseries(config, input, *n, *window),
        JobCommand::Lagrange { input } => run_lagrange(config, input),
    }
}

/// Executes and prints; returns the process exit code.
pub fn run(config: &JobConfig) -> i32 {
    match execute(config) {
        Ok(text) => {
            print!("{}", text);
            if let Some(path) = &config.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return 1;
                }
            }
            0
        }
        Err(e) => {
            eprintln!("error: {}", e);
            e.exit_code()
        }
    }
}
