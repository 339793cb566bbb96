//! Closed-form bound calculators.
//!
//! All bounds are exact integer formulas: the bi-homogeneous Bezout count
//! over two variable blocks, the critical-locus degree bound, the
//! connected-component bound obtained by summing per-fiber critical counts,
//! and the classical Thom-Milnor bound for comparison.

use crate::poly::BiDegree;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
}

/// Binomial coefficient with the usual conventions: 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Inputs for the bi-homogeneous Bezout bound: block sizes `n` and `k`
/// (affine variable counts per block) and one bi-degree per polynomial.
#[derive(Clone, Debug)]
pub struct BoundInputs {
    pub n: usize,
    pub k: usize,
    pub bidegrees: Vec<BiDegree>,
}

impl BoundInputs {
    pub fn new(n: usize, k: usize, bidegrees: Vec<BiDegree>) -> Result<Self, BoundError> {
        let s = bidegrees.len();
        if s > n + k {
            return Err(BoundError::Hypothesis(format!(
                "{} polynomials exceed n + k = {}",
                s,
                n + k
            )));
        }
        let beta_zero = bidegrees.iter().filter(|d| d.beta == 0).count();
        if beta_zero > n {
            return Err(BoundError::Hypothesis(format!(
                "{} bi-degrees with beta = 0 exceed n = {}",
                beta_zero, n
            )));
        }
        let alpha_zero = bidegrees.iter().filter(|d| d.alpha == 0).count();
        if alpha_zero > k {
            return Err(BoundError::Hypothesis(format!(
                "{} bi-degrees with alpha = 0 exceed k = {}",
                alpha_zero, k
            )));
        }
        Ok(BoundInputs { n, k, bidegrees })
    }
}

/// Bi-homogeneous Bezout bound: the sum over all partitions of the index
/// set into disjoint `I`, `J` with `|I| <= n` and `|J| <= k` of
/// `prod_{i in I} alpha_i * prod_{j in J} beta_j` (empty products are 1).
pub fn bezout_bound(inputs: &BoundInputs) -> u128 {
    let s = inputs.bidegrees.len();
    let mut total: u128 = 0;
    for mask in 0u64..(1u64 << s) {
        let i_count = mask.count_ones() as usize;
        let j_count = s - i_count;
        if i_count > inputs.n || j_count > inputs.k {
            continue;
        }
        let mut prod: u128 = 1;
        for (idx, d) in inputs.bidegrees.iter().enumerate() {
            let f = if mask >> idx & 1 == 1 { d.alpha } else { d.beta };
            prod *= f as u128;
            if prod == 0 {
                break;
            }
        }
        total += prod;
    }
    total
}

/// Degree bound for the critical locus of a projection to a line restricted
/// to the variety cut out by `s = degrees.len()` polynomials in `n`
/// variables: `D_1 ... D_s (D-1)^{n-s} C(n, n-s)`, with `C(n-1, n-s)` when
/// the defining sequence is regular.
pub fn critical_bound(degrees: &[u32], n: usize, regular: bool) -> Result<u128, BoundError> {
    let s = degrees.len();
    if s < 1 || s > n.saturating_sub(1) {
        return Err(BoundError::Hypothesis(format!(
            "need 1 <= s <= n - 1, got s = {}, n = {}",
            s, n
        )));
    }
    let d = *degrees.iter().max().unwrap() as u128;
    let mut acc: u128 = degrees.iter().map(|&x| x as u128).product();
    acc *= (d - 1).pow((n - s) as u32);
    let top = if regular { n as u64 - 1 } else { n as u64 };
    acc *= binomial(top, (n - s) as u64);
    Ok(acc)
}

/// Bound on the number of connected components of the real locus, obtained
/// by summing the per-fiber critical-locus bounds:
/// `D_1...D_s sum_{i=0}^{d} (D-1)^{n-s-i} C(n-i, n-i-s)`, where `d` is the
/// variety's dimension. With `regular` set the sum runs to `n - s` with
/// binomials `C(n-1-i, n-i-s)`.
pub fn betti_bound(degrees: &[u32], n: usize, dim: usize, regular: bool) -> u128 {
    let s = degrees.len();
    let d = *degrees.iter().max().unwrap_or(&0) as u128;
    let prod: u128 = degrees.iter().map(|&x| x as u128).product();
    let limit = if regular { n - s } else { dim };
    let mut sum: u128 = 0;
    for i in 0..=limit {
        if n < s + i {
            break;
        }
        let e = (n - s - i) as u32;
        let b = if regular {
            binomial((n - 1 - i) as u64, (n - i - s) as u64)
        } else {
            binomial((n - i) as u64, (n - i - s) as u64)
        };
        let pw = if d >= 1 { (d - 1).pow(e) } else { 0 };
        sum += pw * b;
    }
    prod * sum
}

/// Thom-Milnor style bound `D (2D - 1)^{n-1}` on the number of connected
/// components of a real algebraic set of degree `D` in `n` variables.
pub fn thom_milnor_bound(degree: u32, n: usize) -> u128 {
    assert!(degree >= 1 && n >= 1);
    let d = degree as u128;
    d * (2 * d - 1).pow((n - 1) as u32)
}
