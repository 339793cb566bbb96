//! Rational univariate parameterization of zero-dimensional ideals.
//!
//! A separating linear form `T = sum c_m v_m` is drawn with small random
//! integer coefficients and certified by a degree count: the minimal
//! polynomial of `T` on the quotient ring must reach the ideal degree.
//! Every coordinate is then a polynomial in `T` modulo the squarefree part
//! of that minimal polynomial, recovered by exact linear algebra over the
//! quotient basis.

use crate::groebner::{dimension, groebner_basis, normal_form, quotient_basis, GroebnerBasis, MonomialOrder};
use crate::interval::{eval_upoly_interval, RatInterval};
use crate::poly::{Monomial, Polynomial};
use crate::sampler::sturm::refine_root_interval;
use crate::upoly::UPoly;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(i64),
    #[error("no certified separating form found after {attempts} draws")]
    SeparationFailed { attempts: usize },
    #[error("denominator vanishes on the root interval after refinement")]
    DenominatorVanishes,
}

/// Zero-dimensional solution set encoded as `v_m = q_m(T) / q0(T)` at the
/// roots of the squarefree `f(T) = 0`.
#[derive(Clone, Debug)]
pub struct RationalParameterization {
    pub t_name: String,
    /// Squarefree minimal polynomial of the separating form; its real
    /// roots enumerate the real solutions.
    pub f: UPoly,
    pub q0: UPoly,
    /// One numerator per coordinate, reduced modulo `f`.
    pub coords: Vec<UPoly>,
    pub coord_names: Vec<String>,
    /// Coefficients of the separating form, one per coordinate.
    pub separating: Vec<i64>,
    /// Degree of the solved ideal (with multiplicities).
    pub ideal_degree: usize,
}

// Invert a square rational matrix; None when singular.
fn invert(mat: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat.to_vec();
    let mut b: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        b.swap(p, col);
        let inv = a[col][col].recip();
        for c in 0..n {
            a[col][c] = &a[col][c] * &inv;
            b[col][c] = &b[col][c] * &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let ta = &f * &a[col][c];
                let tb = &f * &b[col][c];
                a[r][c] = &a[r][c] - ta;
                b[r][c] = &b[r][c] - tb;
            }
        }
    }
    Some(b)
}

fn mat_vec(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
        .collect()
}

// Coordinates of the normal form of `p` over the quotient basis.
fn nf_vector(
    p: &Polynomial,
    gb: &GroebnerBasis,
    index: &BTreeMap<Monomial, usize>,
) -> Vec<BigRational> {
    let nf = normal_form(p, gb);
    let mut v = vec![BigRational::zero(); index.len()];
    for (m, c) in nf.terms() {
        let i = *index.get(m).expect("normal form stays on the staircase");
        v[i] = c.clone();
    }
    v
}

/// Solves a zero-dimensional ideal into a rational parameterization.
pub fn solve_zero_dim<R: Rng>(
    gens: &[Polynomial],
    rng: &mut R,
) -> Result<RationalParameterization, SolveError> {
    const ATTEMPTS: usize = 8;
    const COEFF_BOUND: i64 = 20;
    let ring = gens.first().expect("need at least one generator").ring().clone();
    let gb = groebner_basis(gens, MonomialOrder::DegRevLex);
    let dim = dimension(&gb);
    if dim != 0 {
        return Err(SolveError::NotZeroDimensional(dim));
    }
    let qb = quotient_basis(&gb).expect("dimension checked");
    let delta = qb.degree();
    let index: BTreeMap<Monomial, usize> = qb
        .monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let n = ring.nvars();

    for attempt in 0..ATTEMPTS {
        // straight coordinate directions first, then random combinations
        let coeffs: Vec<i64> = if attempt < n {
            (0..n).map(|m| i64::from(m == attempt)).collect()
        } else {
            let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
            if c.iter().all(|&x| x == 0) {
                c[0] = 1;
            }
            c
        };
        let mut t_poly = Polynomial::zero(&ring);
        for (m, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                t_poly = t_poly.add(&Polynomial::var(&ring, m).scale(&BigRational::from_integer(c.into())));
            }
        }

        // powers of T over the quotient basis
        let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(delta + 1);
        let mut current = Polynomial::one(&ring);
        powers.push(nf_vector(&current, &gb, &index));
        for _ in 0..delta {
            current = normal_form(&current.mul(&t_poly), &gb);
            powers.push(nf_vector(&current, &gb, &index));
        }

        // V[row][col] = coordinate `row` of T^col, col < delta
        let v_mat: Vec<Vec<BigRational>> = (0..delta)
            .map(|row| (0..delta).map(|col| powers[col][row].clone()).collect())
            .collect();
        let Some(v_inv) = invert(&v_mat) else {
            // minimal polynomial degree below the ideal degree: not certified
            continue;
        };

        // monic minimal polynomial: T^delta - sum c_p T^p
        let last: Vec<BigRational> = (0..delta).map(|row| powers[delta][row].clone()).collect();
        let dep = mat_vec(&v_inv, &last);
        let mut fc = vec![BigRational::zero(); delta + 1];
        fc[delta] = BigRational::one();
        for (p, c) in dep.iter().enumerate() {
            fc[p] = -c.clone();
        }
        let f_min = UPoly::new(fc);
        let f_sf = f_min.squarefree_part();

        // each coordinate as a polynomial in T
        let mut coords = Vec::with_capacity(n);
        for m in 0..n {
            let w = nf_vector(&Polynomial::var(&ring, m), &gb, &index);
            let g = mat_vec(&v_inv, &w);
            coords.push(UPoly::new(g).rem(&f_sf));
        }
        return Ok(RationalParameterization {
            t_name: "T".to_string(),
            f: f_sf,
            q0: UPoly::one(),
            coords,
            coord_names: ring.var_names().to_vec(),
            separating: coeffs,
            ideal_degree: delta,
        });
    }
    Err(SolveError::SeparationFailed { attempts: ATTEMPTS })
}

/// Exact identity check: every input polynomial vanishes at the
/// parameterized point, i.e. `g(q_1(T), ..., q_n(T)) = 0 mod f`.
pub fn check_parameterization(param: &RationalParameterization, polys: &[Polynomial]) -> bool {
    for g in polys {
        let mut acc = UPoly::zero();
        for (mono, c) in g.terms() {
            let mut term = UPoly::constant(c.clone());
            for (vi, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&param.coords[vi]).rem(&param.f);
                }
            }
            acc = acc.add(&term);
        }
        if !acc.rem(&param.f).is_zero() {
            return false;
        }
    }
    true
}

/// Interval image of each coordinate over an isolating interval of a root
/// of `param.f`, refined until every coordinate is narrower than `width`.
pub fn evaluate_parameterization(
    param: &RationalParameterization,
    root: &RatInterval,
    width: &BigRational,
) -> Result<(RatInterval, Vec<RatInterval>), SolveError> {
    const MAX_REFINE: usize = 4096;
    let mut t = root.clone();
    for _ in 0..MAX_REFINE {
        let q0 = eval_upoly_interval(&param.q0, &t);
        if q0.contains_zero() && !t.is_point() {
            t = refine_root_interval(&param.f, &t);
            continue;
        }
        if q0.contains_zero() {
            return Err(SolveError::DenominatorVanishes);
        }
        let cube: Vec<RatInterval> = param
            .coords
            .iter()
            .map(|q| {
                eval_upoly_interval(q, &t)
                    .div(&q0)
                    .expect("denominator checked above")
            })
            .collect();
        if t.is_point() || cube.iter().all(|iv| &iv.width() < width) {
            return Ok((t, cube));
        }
        t = refine_root_interval(&param.f, &t);
    }
    Err(SolveError::DenominatorVanishes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};
    use crate::sampler::sturm::isolate_real_roots;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_point_recovers_coordinates() {
        let r = Ring::new(vec!["x", "y"]);
        let gens = vec![
            parse_polynomial("x - 1", &r).unwrap(),
            parse_polynomial("y - 2", &r).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let param = solve_zero_dim(&gens, &mut rng).unwrap();
        assert_eq!(param.ideal_degree, 1);
        assert_eq!(param.f.degree(), 1);
        let roots = isolate_real_roots(&param.f, &rat(1, 1 << 20));
        assert_eq!(roots.len(), 1);
        let (_, cube) = evaluate_parameterization(&param, &roots[0], &rat(1, 1 << 20)).unwrap();
        assert_eq!(cube[0], RatInterval::point(rat(1, 1)));
        assert_eq!(cube[1], RatInterval::point(rat(2, 1)));
    }

    #[test]
    fn circle_fiber_two_real_points() {
        let r = Ring::new(vec!["x", "y"]);
        let gens = vec![
            parse_polynomial("x^2 + y^2 - 1", &r).unwrap(),
            parse_polynomial("x - 1/3", &r).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let param = solve_zero_dim(&gens, &mut rng).unwrap();
        assert_eq!(param.ideal_degree, 2);
        assert!(check_parameterization(&param, &gens));
        let width = rat(1, 1 << 20);
        let roots = isolate_real_roots(&param.f, &width);
        assert_eq!(roots.len(), 2);
        // y = +-sqrt(8)/3 = +-0.94280904...
        let mut ys = Vec::new();
        for root in &roots {
            let (_, cube) = evaluate_parameterization(&param, root, &width).unwrap();
            assert!(cube[0].contains(&rat(1, 3)));
            assert!(cube[1].width() < width);
            ys.push(cube[1].clone());
        }
        ys.sort_by(|a, b| a.lo.cmp(&b.lo));
        assert!(ys[0].contains(&rat(-94280904, 100000000)));
        assert!(ys[1].contains(&rat(94280904, 100000000)));
    }

    #[test]
    fn non_radical_collapses_under_squarefree() {
        let r = Ring::new(vec!["x"]);
        let gens = vec![parse_polynomial("x^2", &r).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let param = solve_zero_dim(&gens, &mut rng).unwrap();
        assert_eq!(param.ideal_degree, 2);
        assert_eq!(param.f.degree(), 1);
        let roots = isolate_real_roots(&param.f, &rat(1, 16));
        assert_eq!(roots.len(), 1);
        let (_, cube) = evaluate_parameterization(&param, &roots[0], &rat(1, 16)).unwrap();
        assert_eq!(cube[0], RatInterval::point(rat(0, 1)));
    }

    #[test]
    fn positive_dimension_rejected() {
        let r = Ring::new(vec!["x", "y"]);
        let gens = vec![parse_polynomial("x*y - 1", &r).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert!(matches!(
            solve_zero_dim(&gens, &mut rng),
            Err(SolveError::NotZeroDimensional(1))
        ));
    }

    #[test]
    fn width_refinement_nests() {
        let r = Ring::new(vec!["x", "y"]);
        let gens = vec![
            parse_polynomial("x^2 + y^2 - 1", &r).unwrap(),
            parse_polynomial("x - 1/3", &r).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let param = solve_zero_dim(&gens, &mut rng).unwrap();
        let roots = isolate_real_roots(&param.f, &rat(1, 4));
        let (_, wide) = evaluate_parameterization(&param, &roots[0], &rat(1, 64)).unwrap();
        let (_, narrow) = evaluate_parameterization(&param, &roots[0], &rat(1, 1 << 16)).unwrap();
        for (w, n) in wide.iter().zip(&narrow) {
            assert!(w.lo <= n.lo && n.hi <= w.hi, "refined boxes must nest");
        }
    }
}
