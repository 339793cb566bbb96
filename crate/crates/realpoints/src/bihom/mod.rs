//! Bi-homogeneous machinery: Hilbert bi-series, canonical forms, bi-degrees
//! by generic slicing, and the closed-form bound calculators.

mod biseries;
mod bounds;
mod slicing;

pub use biseries::{canonical_form, hilbert_biseries, specialize_to_hilbert_series, BiSeriesTable, CanonicalForm};
pub use bounds::{bezout_bound, betti_bound, binomial, critical_bound, thom_milnor_bound, BoundError, BoundInputs};
pub use slicing::bidegree_by_slicing;

use crate::poly::BlockError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BihomError {
    #[error("generator {index} is not bi-homogeneous")]
    NotBiHomogeneous { index: usize },
    #[error("window {imax}x{jmax} too small; enlarge and retry")]
    WindowTooSmall { imax: usize, jmax: usize },
    #[error("canonical form found a pole of total order {found} above the claimed dimension {claimed}")]
    InconsistentDimension { claimed: i64, found: i64 },
    #[error("bi-degree ({d},{e}) needs d+1 <= {nx} X-forms and e+1 <= {nl} L-forms")]
    SliceOutOfRange { d: usize, e: usize, nx: usize, nl: usize },
    #[error("generic slicing failed {attempts} times; genericity set repeatedly hit or wrong dimension")]
    SliceRetriesExhausted { attempts: usize },
    #[error(transparent)]
    Block(#[from] BlockError),
}

use crate::poly::{BlockSplit, Polynomial, Ring};

/// Window policy: computes the bi-series with an adaptive window, doubling
/// until the canonical form's guard band is satisfied.
pub fn canonical_form_auto(
    ring: &Ring,
    gens: &[Polynomial],
    split: &BlockSplit,
    dim: i64,
) -> Result<(BiSeriesTable, CanonicalForm), BihomError> {
    let maxdeg = gens.iter().map(|g| g.total_degree()).max().unwrap_or(0) as usize;
    let mut window = 2 * maxdeg + 4;
    loop {
        let table = hilbert_biseries(ring, gens, split, window, window)?;
        match canonical_form(&table, dim) {
            Ok(cf) => return Ok((table, cf)),
            Err(BihomError::WindowTooSmall { .. }) if window < 512 => {
                window *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}
