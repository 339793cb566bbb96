//! Bi-degrees by generic slicing.
//!
//! The bi-degree `C_{d,e}` of a bi-homogeneous ideal is the degree of the
//! zero-dimensional ideal obtained by adding `d+1` generic homogeneous
//! linear forms in the X block (the first one affinized by subtracting 1)
//! and `e+1` such forms in the L block. This is the computational route
//! that the canonical form of the Hilbert bi-series must agree with.

use crate::bihom::BihomError;
use crate::groebner::{dimension, groebner_basis, quotient_basis, MonomialOrder};
use crate::poly::{BlockSplit, Polynomial, Ring};
use num_rational::BigRational;
use rand::Rng;

const COEFF_BOUND: i64 = 997;
const ATTEMPTS: usize = 5;

fn random_homogeneous_form<R: Rng>(ring: &Ring, idx: &[usize], rng: &mut R) -> Polynomial {
    loop {
        let mut form = Polynomial::zero(ring);
        for &v in idx {
            let c = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
            if c != 0 {
                form = form.add(&Polynomial::var(ring, v).scale(&BigRational::from_integer(c.into())));
            }
        }
        if !form.is_zero() {
            return form;
        }
    }
}

/// Degree of `gens + <u_1 - 1, u_2, ..., u_{d+1}, v_1 - 1, v_2, ..., v_{e+1}>`
/// for random block-homogeneous linear forms; 0 when the sum is the unit
/// ideal. Retries degenerate draws up to a fixed budget.
pub fn bidegree_by_slicing<R: Rng>(
    ring: &Ring,
    gens: &[Polynomial],
    split: &BlockSplit,
    d: usize,
    e: usize,
    rng: &mut R,
) -> Result<usize, BihomError> {
    split.validate(ring).map_err(BihomError::Block)?;
    let x_idx = split.x_indices(ring);
    let l_idx = split.l_indices(ring);
    if d + 1 > x_idx.len() || e + 1 > l_idx.len() {
        return Err(BihomError::SliceOutOfRange {
            d,
            e,
            nx: x_idx.len(),
            nl: l_idx.len(),
        });
    }

    for _ in 0..ATTEMPTS {
        let mut sliced = gens.to_vec();
        for t in 0..=d {
            let mut form = random_homogeneous_form(ring, &x_idx, rng);
            if t == 0 {
                form = form.sub(&Polynomial::one(ring));
            }
            sliced.push(form);
        }
        for t in 0..=e {
            let mut form = random_homogeneous_form(ring, &l_idx, rng);
            if t == 0 {
                form = form.sub(&Polynomial::one(ring));
            }
            sliced.push(form);
        }
        let gb = groebner_basis(&sliced, MonomialOrder::DegRevLex);
        if gb.is_unit_ideal() {
            return Ok(0);
        }
        if dimension(&gb) == 0 {
            return Ok(quotient_basis(&gb).expect("dimension checked").degree());
        }
    }
    Err(BihomError::SliceRetriesExhausted { attempts: ATTEMPTS })
}
