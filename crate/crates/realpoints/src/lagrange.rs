//! Builders for critical-point systems.
//!
//! Given constraints `f_1, ..., f_s` cutting out a smooth variety and an
//! objective, critical points are characterized by the objective's gradient
//! lying in the span of the constraint gradients. The systems below state
//! that with multiplier variables: the general Lagrange system, the
//! projection system onto the first coordinate (right-hand side `e_1`), the
//! reduced variant available for regular sequences, and the pinned fiber
//! systems that drive the sampler.

use crate::interval::{eval_poly_box, interval_determinant, RatInterval};
use crate::poly::{apply_linear_change, BlockSplit, LinearChange, Polynomial, Ring};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LagrangeError {
    #[error("need s <= n - 1 constraints, got s = {s}, n = {n}")]
    TooManyConstraints { s: usize, n: usize },
    #[error("the pipeline requires the radical-and-smooth assertion")]
    MissingSmoothnessAssertion,
    #[error("constraint {0} is constant")]
    ConstantConstraint(usize),
    #[error("fiber depth {depth} out of range 0..={dim}")]
    DepthOutOfRange { depth: usize, dim: usize },
    #[error("fiber depth {depth} needs {depth} pin values, got {given}")]
    NotEnoughPins { depth: usize, given: usize },
    #[error("reduced projection system requires the regular-sequence flag")]
    NotRegularSequence,
    #[error("point does not satisfy the constraints")]
    NotOnVariety,
    #[error("polynomial lives in the wrong ring")]
    RingMismatch,
}

/// The input constraints `f_1, ..., f_s` in `Q[X_1..X_n]` with their
/// structural assertions. Smoothness and radicality of the constraints are
/// trusted assertions, not verified properties.
#[derive(Clone, Debug)]
pub struct InputSystem {
    polys: Vec<Polynomial>,
    ring: Ring,
    degrees: Vec<u32>,
    assume_regular_sequence: bool,
}

impl InputSystem {
    pub fn new(
        polys: Vec<Polynomial>,
        assume_regular_sequence: bool,
        assume_radical_smooth: bool,
    ) -> Result<Self, LagrangeError> {
        if !assume_radical_smooth {
            return Err(LagrangeError::MissingSmoothnessAssertion);
        }
        let ring = polys.first().expect("need at least one constraint").ring().clone();
        let n = ring.nvars();
        let s = polys.len();
        if s > n.saturating_sub(1) {
            return Err(LagrangeError::TooManyConstraints { s, n });
        }
        let mut degrees = Vec::with_capacity(s);
        for (i, f) in polys.iter().enumerate() {
            if f.ring() != &ring {
                return Err(LagrangeError::RingMismatch);
            }
            if f.is_constant() {
                return Err(LagrangeError::ConstantConstraint(i));
            }
            degrees.push(f.total_degree());
        }
        Ok(InputSystem { polys, ring, degrees, assume_regular_sequence })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn s(&self) -> usize {
        self.polys.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn max_degree(&self) -> u32 {
        *self.degrees.iter().max().unwrap()
    }

    pub fn assume_regular_sequence(&self) -> bool {
        self.assume_regular_sequence
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.ring.var_names().iter().map(|s| s.as_str()).collect()
    }

    /// The constraints after the change of variables induced by `a`.
    pub fn transformed_polys(&self, a: &LinearChange) -> Vec<Polynomial> {
        let names = self.var_names();
        self.polys
            .iter()
            .map(|f| apply_linear_change(f, a, &names).expect("dimension checked"))
            .collect()
    }
}

/// What the non-constraint rows of a built system say.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// Gradient span condition against a general objective.
    Lagrange { objective: Polynomial },
    /// Projection to the first coordinate: right-hand side `e_1`.
    Projection,
    /// Regular-sequence reduction with `s - 1` multipliers.
    ReducedProjection,
    /// Projection to coordinate `depth + 1` with the first `depth`
    /// coordinates pinned.
    Fiber { depth: usize },
}

/// A built polynomial system over an extended ring containing the original
/// coordinates and any multiplier variables.
#[derive(Clone, Debug)]
pub struct LagrangeSystem {
    polys: Vec<Polynomial>,
    ring: Ring,
    split: BlockSplit,
    kind: SystemKind,
    multiplier_names: Vec<String>,
}

impl LagrangeSystem {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn split(&self) -> &BlockSplit {
        &self.split
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    pub fn multiplier_names(&self) -> Vec<&str> {
        self.multiplier_names.iter().map(|s| s.as_str()).collect()
    }
}

/// A fiber system: the constraints after a change of variables, the first
/// `depth` coordinates pinned to `p`, and (below the top depth) the
/// gradient rows for the projection onto coordinate `depth + 1`.
#[derive(Clone, Debug)]
pub struct FiberSystem {
    pub system: LagrangeSystem,
    pub depth: usize,
    pub a: LinearChange,
    pub p: Vec<BigRational>,
}

// Extends the coordinate ring with fresh multiplier names.
fn multiplier_ring(ring: &Ring, count: usize, base: char) -> (Ring, Vec<String>) {
    let mut names = Vec::with_capacity(count);
    let mut r = ring.clone();
    for i in 0..count {
        let name = r.fresh_name(&format!("{}{}", base, i + 1));
        r = r.extend(vec![name.clone()]);
        names.push(name);
    }
    (r, names)
}

// Rows `sum_j mult_j * d f_j / d X_m - rhs_m` for m in `coords`.
fn gradient_rows(
    ext: &Ring,
    constraints: &[Polynomial],
    multipliers: &[String],
    coords: &[usize],
    rhs: impl Fn(usize) -> Polynomial,
) -> Vec<Polynomial> {
    let mult_polys: Vec<Polynomial> = multipliers
        .iter()
        .map(|n| Polynomial::var_by_name(ext, n).expect("multiplier in ring"))
        .collect();
    coords
        .iter()
        .map(|&m| {
            let mut row = Polynomial::zero(ext);
            for (j, f) in constraints.iter().enumerate() {
                let df = f.partial_derivative(m).embed_by_name(ext);
                row = row.add(&mult_polys[j].mul(&df));
            }
            row.sub(&rhs(m))
        })
        .collect()
}

/// The Lagrange system of the objective restricted to the input variety:
/// the `s` constraints plus, for each coordinate `m`,
/// `sum_j l_j df_j/dX_m - d(objective)/dX_m`.
pub fn build_lagrange(input: &InputSystem, objective: &Polynomial) -> Result<LagrangeSystem, LagrangeError> {
    if objective.ring() != input.ring() {
        return Err(LagrangeError::RingMismatch);
    }
    let (ext, mult_names) = multiplier_ring(input.ring(), input.s(), 'l');
    let mut polys: Vec<Polynomial> = input.polys().iter().map(|f| f.embed_by_name(&ext)).collect();
    let coords: Vec<usize> = (0..input.n()).collect();
    let constraints = input.polys().to_vec();
    let obj = objective.clone();
    polys.extend(gradient_rows(&ext, &constraints, &mult_names, &coords, |m| {
        obj.partial_derivative(m).embed_by_name(&ext)
    }));
    let split = BlockSplit::new(
        input.ring().var_names().to_vec(),
        mult_names.clone(),
    );
    Ok(LagrangeSystem {
        polys,
        ring: ext,
        split,
        kind: SystemKind::Lagrange { objective: objective.clone() },
        multiplier_names: mult_names,
    })
}

/// The projection system onto the first coordinate for the transformed
/// constraints: right-hand side vector `(1, 0, ..., 0)`.
pub fn build_projection_system(input: &InputSystem, a: &LinearChange) -> Result<LagrangeSystem, LagrangeError> {
    build_fiber_power(input, a, &[], 0, SystemKind::Projection)
}

fn build_fiber_power(
    input: &InputSystem,
    a: &LinearChange,
    pins: &[BigRational],
    depth: usize,
    kind: SystemKind,
) -> Result<LagrangeSystem, LagrangeError> {
    let transformed = input.transformed_polys(a);
    let (ext, mult_names) = multiplier_ring(input.ring(), input.s(), 'l');
    let mut polys: Vec<Polynomial> = transformed.iter().map(|f| f.embed_by_name(&ext)).collect();
    for (m, val) in pins.iter().enumerate().take(depth) {
        let pin = Polynomial::var(&ext, m).sub(&Polynomial::constant(&ext, val.clone()));
        polys.push(pin);
    }
    let coords: Vec<usize> = (depth..input.n()).collect();
    polys.extend(gradient_rows(&ext, &transformed, &mult_names, &coords, |m| {
        if m == depth {
            Polynomial::one(&ext)
        } else {
            Polynomial::zero(&ext)
        }
    }));
    let split = BlockSplit::new(input.ring().var_names().to_vec(), mult_names.clone());
    Ok(LagrangeSystem { polys, ring: ext, split, kind, multiplier_names: mult_names })
}

/// Regular-sequence variant of the projection system: after a random
/// recombination of the last constraint, the multiplier for it is
/// normalized away, leaving `n + s - 1` equations in `n + s - 1` variables.
pub fn build_reduced_projection_system<R: Rng>(
    input: &InputSystem,
    a: &LinearChange,
    rng: &mut R,
) -> Result<LagrangeSystem, LagrangeError> {
    if !input.assume_regular_sequence() {
        return Err(LagrangeError::NotRegularSequence);
    }
    let s = input.s();
    // generic recombination of the last constraint keeps its multiplier
    // away from zero on the critical locus
    let mut constraints = input.polys().to_vec();
    if s > 1 {
        let mut last = constraints[s - 1].clone();
        for f in constraints.iter().take(s - 1) {
            let c = BigRational::from_integer(rng.gen_range(-99i64..=99).into());
            last = last.add(&f.scale(&c));
        }
        constraints[s - 1] = last;
    }
    let names = input.var_names();
    let transformed: Vec<Polynomial> = constraints
        .iter()
        .map(|f| apply_linear_change(f, a, &names).expect("dimension checked"))
        .collect();

    let (ext, mult_names) = multiplier_ring(input.ring(), s - 1, 'm');
    let mut polys: Vec<Polynomial> = transformed.iter().map(|f| f.embed_by_name(&ext)).collect();
    let head: Vec<Polynomial> = transformed[..s - 1].to_vec();
    let last = transformed[s - 1].clone();
    let coords: Vec<usize> = (1..input.n()).collect();
    polys.extend(gradient_rows(&ext, &head, &mult_names, &coords, |m| {
        last.partial_derivative(m).embed_by_name(&ext).neg()
    }));
    let split = BlockSplit::new(input.ring().var_names().to_vec(), mult_names.clone());
    Ok(LagrangeSystem {
        polys,
        ring: ext,
        split,
        kind: SystemKind::ReducedProjection,
        multiplier_names: mult_names,
    })
}

/// The fiber system at `depth`: constraints transformed by `a`, the first
/// `depth` coordinates pinned to `p`, and for depths below `dim` the
/// gradient rows of the projection onto coordinate `depth + 1`. At
/// `depth == dim` only the constraints and pins remain.
pub fn build_fiber_system(
    input: &InputSystem,
    a: &LinearChange,
    p: &[BigRational],
    depth: usize,
    dim: usize,
) -> Result<FiberSystem, LagrangeError> {
    if depth > dim {
        return Err(LagrangeError::DepthOutOfRange { depth, dim });
    }
    if p.len() < depth {
        return Err(LagrangeError::NotEnoughPins { depth, given: p.len() });
    }
    let system = if depth == dim {
        // top depth: no multipliers, plain pinned constraints
        let transformed = input.transformed_polys(a);
        let ring = input.ring().clone();
        let mut polys = transformed;
        for (m, val) in p.iter().enumerate().take(depth) {
            polys.push(Polynomial::var(&ring, m).sub(&Polynomial::constant(&ring, val.clone())));
        }
        LagrangeSystem {
            polys,
            ring: ring.clone(),
            split: BlockSplit::new(ring.var_names().to_vec(), Vec::new()),
            kind: SystemKind::Fiber { depth },
            multiplier_names: Vec::new(),
        }
    } else {
        build_fiber_power(input, a, p, depth, SystemKind::Fiber { depth })?
    };
    Ok(FiberSystem { system, depth, a: a.clone(), p: p[..depth].to_vec() })
}

// Exact rank of a rational matrix by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn exact_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for r in 0..rows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..cols {
                let sub = &f * &m[row][c];
                m[r][c] = &m[r][c] - sub;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Exact membership test: at a rational point of the variety, is the
/// objective's gradient in the span of the constraint gradients? True
/// exactly when the stacked `(s+1) x n` gradient matrix has rank at most
/// `s`.
pub fn lagrange_membership_check(
    point: &[BigRational],
    constraints: &[Polynomial],
    objective: &Polynomial,
) -> Result<bool, LagrangeError> {
    let ring = objective.ring().clone();
    let n = ring.nvars();
    for f in constraints {
        if f.ring() != &ring {
            return Err(LagrangeError::RingMismatch);
        }
        if !f.evaluate(point).is_zero() {
            return Err(LagrangeError::NotOnVariety);
        }
    }
    let s = constraints.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(s + 1);
    for f in constraints {
        rows.push((0..n).map(|m| f.partial_derivative(m).evaluate(point)).collect());
    }
    rows.push((0..n).map(|m| objective.partial_derivative(m).evaluate(point)).collect());
    Ok(exact_rank(rows) <= s)
}

/// Certified box variant: true unless some `(s+1)`-minor of the gradient
/// matrix is bounded away from zero over the box. Errors when a constraint
/// is bounded away from zero over the box (the box misses the variety).
pub fn lagrange_membership_check_box(
    cube: &[RatInterval],
    constraints: &[Polynomial],
    objective: &Polynomial,
) -> Result<bool, LagrangeError> {
    let ring = objective.ring().clone();
    let n = ring.nvars();
    for f in constraints {
        if f.ring() != &ring {
            return Err(LagrangeError::RingMismatch);
        }
        if !eval_poly_box(f, cube).contains_zero() {
            return Err(LagrangeError::NotOnVariety);
        }
    }
    let s = constraints.len();
    if s + 1 > n {
        // fewer columns than rows: rank <= n <= s always
        return Ok(true);
    }
    let mut rows: Vec<Vec<RatInterval>> = Vec::with_capacity(s + 1);
    for f in constraints.iter().chain(std::iter::once(objective)) {
        rows.push(
            (0..n)
                .map(|m| eval_poly_box(&f.partial_derivative(m), cube))
                .collect(),
        );
    }
    // all (s+1)-minors must contain zero
    let mut cols: Vec<usize> = (0..=s).collect();
    loop {
        let minor: Vec<Vec<RatInterval>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        if !interval_determinant(&minor).contains_zero() {
            return Ok(false);
        }
        // next combination of s+1 columns out of n
        let k = cols.len();
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if cols[i] != i + n - k {
                break;
            }
        }
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{dimension, groebner_basis, MonomialOrder};
    use crate::poly::parse_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn circle() -> InputSystem {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &r).unwrap();
        InputSystem::new(vec![f], true, true).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn circle_lagrange_system() {
        let input = circle();
        let obj = parse_polynomial("x", input.ring()).unwrap();
        let sys = build_lagrange(&input, &obj).unwrap();
        assert_eq!(sys.polys().len(), 3);
        let er = sys.ring().clone();
        assert_eq!(sys.polys()[0], parse_polynomial("x^2 + y^2 - 1", &er).unwrap());
        assert_eq!(sys.polys()[1], parse_polynomial("2*x*l1 - 1", &er).unwrap());
        assert_eq!(sys.polys()[2], parse_polynomial("2*y*l1", &er).unwrap());
    }

    #[test]
    fn constant_objective_gives_zero_rhs() {
        let input = circle();
        let obj = parse_polynomial("5", input.ring()).unwrap();
        let sys = build_lagrange(&input, &obj).unwrap();
        let er = sys.ring().clone();
        assert_eq!(sys.polys()[1], parse_polynomial("2*x*l1", &er).unwrap());
        assert_eq!(sys.polys()[2], parse_polynomial("2*y*l1", &er).unwrap());
    }

    #[test]
    fn vertical_line_projection_is_inconsistent() {
        // V(x) projected to y has no critical point: the system contains -1
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x", &r).unwrap();
        let input = InputSystem::new(vec![f], true, true).unwrap();
        let obj = parse_polynomial("y", &r).unwrap();
        let sys = build_lagrange(&input, &obj).unwrap();
        let gb = groebner_basis(sys.polys(), MonomialOrder::DegRevLex);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn projection_system_equals_lagrange_with_first_coordinate() {
        let input = circle();
        let a = LinearChange::identity(2);
        let proj = build_projection_system(&input, &a).unwrap();
        let obj = parse_polynomial("x", input.ring()).unwrap();
        let lag = build_lagrange(&input, &obj).unwrap();
        assert_eq!(proj.polys(), lag.polys());
    }

    #[test]
    fn hyperbola_projection_has_no_critical_points() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x*y - 1", &r).unwrap();
        let input = InputSystem::new(vec![f], true, true).unwrap();
        let sys = build_projection_system(&input, &LinearChange::identity(2)).unwrap();
        let gb = groebner_basis(sys.polys(), MonomialOrder::DegRevLex);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn reduced_circle_system_is_the_polar_curve() {
        let input = circle();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sys =
            build_reduced_projection_system(&input, &LinearChange::identity(2), &mut rng).unwrap();
        // s = 1: no multipliers, just f and df/dy
        assert_eq!(sys.polys().len(), 2);
        assert_eq!(sys.ring().nvars(), 2);
        let er = sys.ring().clone();
        assert_eq!(sys.polys()[1], parse_polynomial("2*y", &er).unwrap());
        let gb = groebner_basis(sys.polys(), MonomialOrder::DegRevLex);
        let qb = crate::groebner::quotient_basis(&gb).unwrap();
        assert_eq!(qb.degree(), 2);
    }

    #[test]
    fn sphere_reduced_system_degree_two() {
        let r = Ring::new(vec!["x", "y", "z"]);
        let f = parse_polynomial("x^2 + y^2 + z^2 - 1", &r).unwrap();
        let input = InputSystem::new(vec![f], true, true).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sys =
            build_reduced_projection_system(&input, &LinearChange::identity(3), &mut rng).unwrap();
        assert_eq!(sys.polys().len(), 3);
        let gb = groebner_basis(sys.polys(), MonomialOrder::DegRevLex);
        let qb = crate::groebner::quotient_basis(&gb).unwrap();
        assert_eq!(qb.degree(), 2);
    }

    #[test]
    fn fiber_depth_counts() {
        let input = circle();
        let a = LinearChange::identity(2);
        let p = vec![BigRational::new(1.into(), 3.into())];
        let f0 = build_fiber_system(&input, &a, &p, 0, 1).unwrap();
        assert_eq!(f0.system.polys().len(), 3); // n + s
        let f1 = build_fiber_system(&input, &a, &p, 1, 1).unwrap();
        assert_eq!(f1.system.polys().len(), 2); // s + d
        assert_eq!(f1.system.ring().nvars(), 2); // no multipliers
        assert!(build_fiber_system(&input, &a, &p, 2, 1).is_err());
    }

    #[test]
    fn circle_top_fiber_has_two_real_points() {
        let input = circle();
        let a = LinearChange::identity(2);
        let p = vec![BigRational::new(1.into(), 3.into())];
        let f1 = build_fiber_system(&input, &a, &p, 1, 1).unwrap();
        let gb = groebner_basis(f1.system.polys(), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&gb), 0);
        let qb = crate::groebner::quotient_basis(&gb).unwrap();
        assert_eq!(qb.degree(), 2);
    }

    #[test]
    fn membership_on_circle_poles() {
        let input = circle();
        let obj = parse_polynomial("x", input.ring()).unwrap();
        let on = lagrange_membership_check(&[rat(1), rat(0)], input.polys(), &obj).unwrap();
        assert!(on);
        let off = lagrange_membership_check(&[rat(0), rat(1)], input.polys(), &obj).unwrap();
        assert!(!off);
        assert!(matches!(
            lagrange_membership_check(&[rat(2), rat(2)], input.polys(), &obj),
            Err(LagrangeError::NotOnVariety)
        ));
    }

    #[test]
    fn membership_with_objective_equal_to_constraint() {
        let input = circle();
        let obj = input.polys()[0].clone();
        let ok = lagrange_membership_check(&[rat(0), rat(1)], input.polys(), &obj).unwrap();
        assert!(ok);
    }

    #[test]
    fn box_membership_matches_exact_on_thin_boxes() {
        let input = circle();
        let obj = parse_polynomial("x", input.ring()).unwrap();
        let near_pole = vec![
            RatInterval::new(BigRational::new(99999.into(), 100000.into()), BigRational::new(100001.into(), 100000.into())),
            RatInterval::new(BigRational::new((-1).into(), 1000.into()), BigRational::new(1.into(), 1000.into())),
        ];
        assert!(lagrange_membership_check_box(&near_pole, input.polys(), &obj).unwrap());
        let near_top = vec![
            RatInterval::new(BigRational::new((-1).into(), 1000.into()), BigRational::new(1.into(), 1000.into())),
            RatInterval::new(BigRational::new(999.into(), 1000.into()), BigRational::new(1001.into(), 1000.into())),
        ];
        assert!(!lagrange_membership_check_box(&near_top, input.polys(), &obj).unwrap());
    }

    #[test]
    fn bihomogenized_system_bezout_dominates_actual_degree() {
        use crate::bihom::{bezout_bound, BoundInputs};
        use crate::poly::{bidegree_of, bihomogenize};
        let input = circle();
        let obj = parse_polynomial("x", input.ring()).unwrap();
        let sys = build_lagrange(&input, &obj).unwrap();
        let gb = groebner_basis(sys.polys(), MonomialOrder::DegRevLex);
        let actual = crate::groebner::quotient_basis(&gb).unwrap().degree();
        let bids: Vec<_> = sys
            .polys()
            .iter()
            .map(|f| {
                let (hom, ext) = bihomogenize(f, sys.split()).unwrap();
                let (bid, uniform) = bidegree_of(&hom, &ext);
                assert!(uniform);
                bid
            })
            .collect();
        let inputs = BoundInputs::new(input.n(), input.s(), bids).unwrap();
        let bound = bezout_bound(&inputs);
        assert!(actual as u128 <= bound, "{} > {}", actual, bound);
        assert_eq!(bound, 4); // two rows of (1,1) and one of (2,0)
        assert_eq!(actual, 2);
    }

    #[test]
    fn elimination_ideal_zero_dim_or_unit_across_seeds() {
        use crate::groebner::{dimension, eliminate};
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;
        let r = Ring::new(vec!["x", "y"]);
        let quartic = parse_polynomial(
            "x^4 + 2*x^2*y^2 + y^4 - 6*x^3 - 6*x*y^2 + 7*x^2 + 7*y^2 + 6*x - 8",
            &r,
        )
        .unwrap();
        let input = InputSystem::new(vec![quartic], true, true).unwrap();
        for seed in [1u64, 2, 3] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = LinearChange::random_integer(2, 99, &mut rng);
            let sys = build_projection_system(&input, &a).unwrap();
            let elim = eliminate(sys.polys(), &sys.multiplier_names());
            let x_gens: Vec<Polynomial> =
                elim.iter().map(|g| g.restrict_to(input.ring())).collect();
            let gb = groebner_basis(&x_gens, MonomialOrder::DegRevLex);
            let d = dimension(&gb);
            assert!(d == 0 || d == -1, "seed {}: dimension {}", seed, d);
        }
    }

    #[test]
    fn input_validation() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &r).unwrap();
        assert!(matches!(
            InputSystem::new(vec![f.clone()], true, false),
            Err(LagrangeError::MissingSmoothnessAssertion)
        ));
        let g = parse_polynomial("x - y", &r).unwrap();
        assert!(matches!(
            InputSystem::new(vec![f.clone(), g], true, true),
            Err(LagrangeError::TooManyConstraints { .. })
        ));
        let c = parse_polynomial("3", &r).unwrap();
        assert!(matches!(
            InputSystem::new(vec![c], true, true),
            Err(LagrangeError::ConstantConstraint(0))
        ));
    }
}
