//! Hilbert bi-series of bi-homogeneous ideals and their canonical form.
//!
//! The bi-series tabulates, for each bi-degree `(i, j)`, the dimension of
//! the space of bi-homogeneous forms of that bi-degree modulo the ideal.
//! It is computed by staircase counting against a Groebner basis. The
//! canonical form rewrites the series over the basis of negative powers of
//! `(1-t1)` and `(1-t2)`; the coefficients on the top anti-diagonal are the
//! bi-degrees `C_{d,e}` of the ideal.

use crate::bihom::bounds::binomial;
use crate::bihom::BihomError;
use crate::groebner::{groebner_basis, MonomialOrder};
use crate::poly::{bidegree_of, BlockSplit, Monomial, Polynomial, Ring};
use std::collections::BTreeMap;

/// Table of `dim(R_{i,j}/I_{i,j})` over a rectangular window.
#[derive(Clone, Debug)]
pub struct BiSeriesTable {
    dims: Vec<Vec<u64>>,
    imax: usize,
    jmax: usize,
    split: BlockSplit,
    guard: usize,
}

impl BiSeriesTable {
    pub fn dim(&self, i: usize, j: usize) -> u64 {
        self.dims[i][j]
    }

    pub fn imax(&self) -> usize {
        self.imax
    }

    pub fn jmax(&self) -> usize {
        self.jmax
    }

    pub fn split(&self) -> &BlockSplit {
        &self.split
    }

    /// Width of the all-zero band required of the numerator polynomial
    /// before the canonical form is trusted.
    pub fn guard(&self) -> usize {
        self.guard
    }
}

// Distributes `total` over the exponent slots `slots`, calling `leaf` on
// every completed assignment and summing its results.
fn enumerate_block(
    slots: &[usize],
    total: u32,
    expo: &mut Vec<u32>,
    leaf: &mut dyn FnMut(&mut Vec<u32>) -> u64,
) -> u64 {
    match slots {
        [] => {
            if total == 0 {
                leaf(expo)
            } else {
                0
            }
        }
        [last] => {
            expo[*last] = total;
            let r = leaf(expo);
            expo[*last] = 0;
            r
        }
        [first, rest @ ..] => {
            let mut acc = 0;
            for e in 0..=total {
                expo[*first] = e;
                acc += enumerate_block(rest, total - e, expo, leaf);
            }
            expo[*first] = 0;
            acc
        }
    }
}

// Counts monomials with block degrees exactly (i, j) that no leading
// monomial divides.
fn count_staircase_cell(
    leads: &[Monomial],
    x_idx: &[usize],
    l_idx: &[usize],
    nvars: usize,
    i: u32,
    j: u32,
) -> u64 {
    let mut expo = vec![0u32; nvars];
    enumerate_block(x_idx, i, &mut expo, &mut |expo_x| {
        enumerate_block(l_idx, j, &mut expo_x.clone(), &mut |full| {
            let m = Monomial(full.clone());
            u64::from(!leads.iter().any(|lm| lm.divides(&m)))
        })
    })
}

/// Computes the Hilbert bi-series table of the ideal generated by
/// bi-homogeneous `gens` over the window `[0..=imax] x [0..=jmax]`.
pub fn hilbert_biseries(
    ring: &Ring,
    gens: &[Polynomial],
    split: &BlockSplit,
    imax: usize,
    jmax: usize,
) -> Result<BiSeriesTable, BihomError> {
    split.validate(ring).map_err(BihomError::Block)?;
    let mut maxdeg = 0u32;
    for (idx, g) in gens.iter().enumerate() {
        let (d, homogeneous) = bidegree_of(g, split);
        if !homogeneous && !g.is_zero() {
            return Err(BihomError::NotBiHomogeneous { index: idx });
        }
        maxdeg = maxdeg.max(d.alpha + d.beta);
    }
    let gb = groebner_basis(gens, MonomialOrder::DegRevLex);
    let leads: Vec<Monomial> = gb.leading_monomials().to_vec();
    let x_idx = split.x_indices(ring);
    let l_idx = split.l_indices(ring);

    let mut dims = vec![vec![0u64; jmax + 1]; imax + 1];
    for (i, row) in dims.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = count_staircase_cell(&leads, &x_idx, &l_idx, ring.nvars(), i as u32, j as u32);
        }
    }
    Ok(BiSeriesTable {
        dims,
        imax,
        jmax,
        split: split.clone(),
        guard: maxdeg as usize + 1,
    })
}

/// Collapses the bi-series onto the single grading: `h_d = sum_{i+j=d}
/// dim(i, j)`, the Hilbert function of the ideal seen as homogeneous.
pub fn specialize_to_hilbert_series(
    table: &BiSeriesTable,
    dmax: usize,
) -> Result<Vec<u64>, BihomError> {
    if dmax > table.imax.min(table.jmax) {
        return Err(BihomError::WindowTooSmall {
            imax: table.imax,
            jmax: table.jmax,
        });
    }
    Ok((0..=dmax)
        .map(|d| (0..=d).map(|i| table.dims[i][d - i]).sum())
        .collect())
}

/// Canonical form of a Hilbert bi-series: the coefficients `C_{d,e}` on the
/// anti-diagonal `d + e + 2 = D` of denominators `(1-t1)^{d+1}(1-t2)^{e+1}`,
/// the lower-order terms, and the polynomial remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Top coefficients: `(d, e) -> C_{d,e}` for `d + e + 2 = D`.
    pub c: BTreeMap<(usize, usize), i64>,
    /// Remaining pole terms `(i, j) -> c_{i,j}` standing for
    /// `c_{i,j} / ((1-t1)^{i+1} (1-t2)^{j+1})`; an index of -1 or below
    /// puts the factor in the numerator.
    pub lower: BTreeMap<(i64, i64), i64>,
    /// Polynomial remainder in `t1`, `t2`.
    pub q: BTreeMap<(usize, usize), i64>,
    /// The dimension the anti-diagonal was read at.
    pub dim: i64,
}

impl CanonicalForm {
    /// Series coefficient at `(i, j)` of the whole canonical form; used to
    /// cross-check the rewrite against the original table.
    pub fn series_coeff(&self, i: usize, j: usize) -> i64 {
        let mut acc: i128 = 0;
        for (&(d, e), &c) in &self.c {
            acc += c as i128 * pole_coeff(d as i64 + 1, i) * pole_coeff(e as i64 + 1, j);
        }
        for (&(d, e), &c) in &self.lower {
            acc += c as i128 * pole_coeff(d + 1, i) * pole_coeff(e + 1, j);
        }
        if let Some(&c) = self.q.get(&(i, j)) {
            acc += c as i128;
        }
        acc as i64
    }
}

// Coefficient of t^i in (1-t)^{-alpha}; for alpha <= 0 this is the plain
// binomial expansion of the numerator power.
fn pole_coeff(alpha: i64, i: usize) -> i128 {
    if alpha >= 1 {
        binomial((i as u64) + (alpha as u64) - 1, alpha as u64 - 1) as i128
    } else {
        let p = (-alpha) as u64;
        if i as u64 > p {
            0
        } else {
            let b = binomial(p, i as u64) as i128;
            if i.is_multiple_of(2) {
                b
            } else {
                -b
            }
        }
    }
}

/// Extracts the canonical form from a bi-series table, reading `C_{d,e}`
/// along the anti-diagonal `d + e + 2 = dim`.
///
/// Errors with [`BihomError::WindowTooSmall`] when the numerator polynomial
/// has not stabilized inside the window (no all-zero trailing guard band),
/// in which case the caller should enlarge the window and retry.
#[allow(clippy::needless_range_loop)]
pub fn canonical_form(table: &BiSeriesTable, dim: i64) -> Result<CanonicalForm, BihomError> {
    let nx = table.split.x_vars().len();
    let nl = table.split.l_vars().len();
    let imax = table.imax;
    let jmax = table.jmax;
    let guard = table.guard.max(1);
    if imax < guard || jmax < guard {
        return Err(BihomError::WindowTooSmall { imax, jmax });
    }

    // numerator P = H * (1-t1)^nx * (1-t2)^nl, exact on the window
    let mut p = vec![vec![0i128; jmax + 1]; imax + 1];
    for i in 0..=imax {
        for j in 0..=jmax {
            let mut acc: i128 = 0;
            for a in 0..=nx.min(i) {
                for b in 0..=nl.min(j) {
                    let sign = if (a + b) % 2 == 0 { 1i128 } else { -1i128 };
                    acc += sign
                        * binomial(nx as u64, a as u64) as i128
                        * binomial(nl as u64, b as u64) as i128
                        * table.dims[i - a][j - b] as i128;
                }
            }
            p[i][j] = acc;
        }
    }

    // the guard band across both trailing edges must vanish
    let ip = imax - guard;
    let jp = jmax - guard;
    for i in 0..=imax {
        for j in 0..=jmax {
            if (i > ip || j > jp) && p[i][j] != 0 {
                return Err(BihomError::WindowTooSmall { imax, jmax });
            }
        }
    }

    // rewrite P over the basis (1-t1)^a (1-t2)^b:
    // p_{a,b} = sum_{i>=a, j>=b} (-1)^{a+b} C(i,a) C(j,b) P_{i,j}
    let mut rewritten: BTreeMap<(usize, usize), i128> = BTreeMap::new();
    for a in 0..=ip {
        for b in 0..=jp {
            let mut acc: i128 = 0;
            for (i, row) in p.iter().enumerate().take(ip + 1).skip(a) {
                for (j, &pij) in row.iter().enumerate().take(jp + 1).skip(b) {
                    if pij == 0 {
                        continue;
                    }
                    acc += binomial(i as u64, a as u64) as i128
                        * binomial(j as u64, b as u64) as i128
                        * pij;
                }
            }
            if (a + b) % 2 == 1 {
                acc = -acc;
            }
            if acc != 0 {
                rewritten.insert((a, b), acc);
            }
        }
    }

    // classify: a term (a, b) stands for p_{a,b} / ((1-t1)^{nx-a} (1-t2)^{nl-b})
    let mut c = BTreeMap::new();
    let mut lower = BTreeMap::new();
    let mut q: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&(a, b), &coeff) in &rewritten {
        let d_idx = nx as i64 - a as i64 - 1;
        let e_idx = nl as i64 - b as i64 - 1;
        if d_idx < 0 && e_idx < 0 {
            // pure polynomial: expand (1-t1)^(-d_idx-1) (1-t2)^(-e_idx-1)
            let pa = (-d_idx - 1) as usize;
            let pb = (-e_idx - 1) as usize;
            for i in 0..=pa {
                for j in 0..=pb {
                    let sign = if (i + j) % 2 == 0 { 1i128 } else { -1i128 };
                    let term = sign
                        * binomial(pa as u64, i as u64) as i128
                        * binomial(pb as u64, j as u64) as i128
                        * coeff;
                    let entry = q.entry((i, j)).or_insert(0);
                    *entry += term as i64;
                }
            }
        } else if d_idx >= 0 && e_idx >= 0 && d_idx + e_idx + 2 == dim {
            c.insert((d_idx as usize, e_idx as usize), coeff as i64);
        } else if d_idx + e_idx + 2 > dim {
            return Err(BihomError::InconsistentDimension {
                claimed: dim,
                found: d_idx + e_idx + 2,
            });
        } else {
            lower.insert((d_idx, e_idx), coeff as i64);
        }
    }
    q.retain(|_, v| *v != 0);

    // admissible slots not realized by the rewrite carry coefficient 0
    if dim >= 2 {
        for d in 0..nx {
            let rest = dim - 2 - d as i64;
            if rest >= 0 && (rest as usize) < nl {
                c.entry((d, rest as usize)).or_insert(0);
            }
        }
    }
    Ok(CanonicalForm { c, lower, q, dim })
}
