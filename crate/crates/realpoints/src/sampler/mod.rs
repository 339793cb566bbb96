//! End-to-end sampling of real algebraic sets.
//!
//! For constraints defining a smooth variety of dimension `d`, the pipeline
//! draws a random change of variables, builds the pinned fiber system at
//! every depth `0..=d`, eliminates the multipliers, solves each
//! zero-dimensional elimination ideal into a rational parameterization,
//! isolates real roots, and maps certified boxes back to the original
//! coordinates. The union of the resulting points meets every connected
//! component of the real locus; each box is interval-certified against the
//! input equations and the critical-point membership condition.

mod rur;
mod sturm;

pub use rur::{
    check_parameterization, evaluate_parameterization, solve_zero_dim, RationalParameterization,
    SolveError,
};
pub use sturm::{isolate_real_roots, refine_root_interval, SturmChain};

use crate::bihom::betti_bound;
use crate::groebner::{dimension, groebner_basis, MonomialOrder};
use crate::interval::{eval_poly_box, RatInterval};
use crate::lagrange::{
    build_fiber_system, lagrange_membership_check_box, InputSystem, LagrangeError,
};
use crate::poly::{LinearChange, Polynomial};
use crate::rng::SeedSource;
use num_rational::BigRational;
use num_traits::Zero;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SampleError {
    #[error("depth {depth}: {attempts} generic draws all failed ({last}); the radicality/smoothness hypotheses are likely violated")]
    HypothesisViolation {
        depth: usize,
        attempts: usize,
        last: String,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Lagrange(#[from] LagrangeError),
}

/// A certified box around one sample point, in the original coordinates.
#[derive(Clone, Debug)]
pub struct IsolatingBox {
    pub coords: Vec<RatInterval>,
    pub root: RatInterval,
    pub fiber_depth: usize,
    pub witness_seed: u64,
    pub on_variety: bool,
    pub membership: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthStatus {
    /// Elimination ideal was zero-dimensional of the given degree.
    ZeroDimensional { degree: usize },
    /// Elimination ideal was the unit ideal: no critical points there.
    Inconsistent,
}

#[derive(Clone, Debug)]
pub struct DepthReport {
    pub depth: usize,
    pub status: DepthStatus,
    pub retries: usize,
    /// Per-depth output bound: the corresponding critical-point count bound.
    pub bound: u128,
    pub real_points: usize,
    pub parameterization: Option<RationalParameterization>,
    pub cross_check_agreed: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub seed: u64,
    pub width: BigRational,
    pub dimension: i64,
    pub depths: Vec<DepthReport>,
    pub points: Vec<IsolatingBox>,
    pub component_bound: u128,
    pub input_polys: Vec<Polynomial>,
}

impl SampleReport {
    pub fn all_certified(&self) -> bool {
        self.points.iter().all(|p| p.on_variety && p.membership)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SampleOptions {
    pub parallel: bool,
    pub cross_check: bool,
}

// A refinable point: the parameterization that produced it plus the current
// isolating interval of its T-root.
#[derive(Clone)]
struct SamplePoint {
    param: Arc<RationalParameterization>,
    root: RatInterval,
    depth: usize,
    a: LinearChange,
}

impl SamplePoint {
    fn cube_a(&self) -> Vec<RatInterval> {
        self.param
            .coords
            .iter()
            .map(|q| crate::interval::eval_upoly_interval(q, &self.root))
            .collect()
    }

    fn cube_x(&self) -> Vec<RatInterval> {
        transform_cube(&self.a, &self.cube_a())
    }

    fn refine(&mut self) {
        self.root = refine_root_interval(&self.param.f, &self.root);
    }

    fn max_width(&self) -> BigRational {
        self.cube_x()
            .iter()
            .map(|iv| iv.width())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

fn transform_cube(a: &LinearChange, cube: &[RatInterval]) -> Vec<RatInterval> {
    a.matrix()
        .iter()
        .map(|row| {
            let mut acc = RatInterval::zero();
            for (c, iv) in row.iter().zip(cube) {
                if !c.is_zero() {
                    acc = acc.add(&iv.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Interval certificate that a box straddles the variety: every constraint
/// evaluates to an interval containing zero.
pub fn verify_on_variety(cube: &[RatInterval], input: &InputSystem) -> bool {
    input.polys().iter().all(|f| eval_poly_box(f, cube).contains_zero())
}

struct DepthOutcome {
    report: DepthReport,
    points: Vec<SamplePoint>,
}

// Per-depth fiber computation with the retry policy: three fresh draws of
// the change of variables, then three perturbations of the pin point (each
// paired with a fresh matrix).
fn run_depth(
    input: &InputSystem,
    seeds: &SeedSource,
    depth: usize,
    dim: usize,
    width: &BigRational,
    cross_check: bool,
) -> Result<DepthOutcome, SampleError> {
    const A_BOUND: i64 = 99;
    let n = input.n();
    let mut last_failure = String::from("no attempt made");
    let mut retries = 0usize;
    for p_shift in 0u64..=3 {
        for a_try in 0u64..3 {
            let attempt = p_shift * 3 + a_try;
            // the base draw shares one change of variables across all
            // depths (the union argument needs it); only retries after a
            // degenerate draw use a depth-local fresh matrix
            let mut a_rng = if attempt == 0 {
                seeds.stream("matrix-a", 0)
            } else {
                seeds.stream("matrix-a", ((depth as u64) + 1) << 8 | attempt)
            };
            let a = LinearChange::random_integer(n, A_BOUND, &mut a_rng);
            let p: Vec<BigRational> = (0..dim)
                .map(|_| BigRational::from_integer(p_shift.into()))
                .collect();
            let fiber = build_fiber_system(input, &a, &p, depth, dim)?;

            // project onto the coordinate block
            let x_gens: Vec<Polynomial> = if depth < dim {
                let mult = fiber.system.multiplier_names();
                let eliminated = crate::groebner::eliminate(fiber.system.polys(), &mult);
                eliminated
                    .iter()
                    .map(|g| g.restrict_to(input.ring()))
                    .collect()
            } else {
                fiber.system.polys().to_vec()
            };
            if x_gens.is_empty() {
                retries += 1;
                last_failure = format!("depth {}: elimination ideal is zero", depth);
                continue;
            }
            let gb = groebner_basis(&x_gens, MonomialOrder::DegRevLex);
            if gb.is_unit_ideal() {
                return Ok(DepthOutcome {
                    report: DepthReport {
                        depth,
                        status: DepthStatus::Inconsistent,
                        retries,
                        bound: depth_bound(input, depth),
                        real_points: 0,
                        parameterization: None,
                        cross_check_agreed: None,
                    },
                    points: Vec::new(),
                });
            }
            let d_x = dimension(&gb);
            if d_x != 0 {
                retries += 1;
                last_failure =
                    format!("depth {}: elimination ideal has dimension {}", depth, d_x);
                continue;
            }

            let mut solve_rng = seeds.stream("separating", (depth as u64) << 8 | attempt);
            let param = Arc::new(solve_zero_dim(gb.generators(), &mut solve_rng)?);
            let roots = isolate_real_roots(&param.f, width);
            let points: Vec<SamplePoint> = roots
                .into_iter()
                .map(|root| SamplePoint { param: param.clone(), root, depth, a: a.clone() })
                .collect();

            let cross_check_agreed = if cross_check && depth < dim {
                Some(cross_check_depth(input, seeds, &fiber, &points, width)?)
            } else {
                None
            };

            return Ok(DepthOutcome {
                report: DepthReport {
                    depth,
                    status: DepthStatus::ZeroDimensional { degree: param.ideal_degree },
                    retries,
                    bound: depth_bound(input, depth),
                    real_points: points.len(),
                    parameterization: Some(param.as_ref().clone()),
                    cross_check_agreed,
                },
                points,
            });
        }
    }
    Err(SampleError::HypothesisViolation { depth, attempts: retries, last: last_failure })
}

// The critical-point count bound for the fiber at `depth`: the variety cut
// by the pins lives in n - depth coordinates.
fn depth_bound(input: &InputSystem, depth: usize) -> u128 {
    let n = input.n();
    let s = input.s();
    let degrees = input.degrees();
    let prod: u128 = degrees.iter().map(|&x| x as u128).product();
    if n <= depth + s {
        // top fiber: plain Bezout
        return prod;
    }
    let m = n - depth;
    let d = input.max_degree() as u128;
    let top = if input.assume_regular_sequence() { m as u64 - 1 } else { m as u64 };
    prod * (d - 1).pow((m - s) as u32) * crate::bihom::binomial(top, (m - s) as u64)
}

// Solves the full fiber ideal (coordinates and multipliers) after slicing
// away its generic fiber dimension with random hyperplanes, and checks that
// every elimination-route point reappears among the projections.
fn cross_check_depth(
    input: &InputSystem,
    seeds: &SeedSource,
    fiber: &crate::lagrange::FiberSystem,
    route_points: &[SamplePoint],
    width: &BigRational,
) -> Result<bool, SampleError> {
    let ring = fiber.system.ring().clone();
    let full_gb = groebner_basis(fiber.system.polys(), MonomialOrder::DegRevLex);
    if full_gb.is_unit_ideal() {
        return Ok(route_points.is_empty());
    }
    let p_dim = dimension(&full_gb);
    let mut gens: Vec<Polynomial> = fiber.system.polys().to_vec();
    if p_dim > 0 {
        let mut rng = seeds.stream("cross-check-b", fiber.depth as u64);
        let b = LinearChange::random_integer(ring.nvars(), 99, &mut rng);
        let names: Vec<&str> = ring.var_names().iter().map(|s| s.as_str()).collect();
        for r in 0..p_dim as usize {
            let mut form = Polynomial::zero(&ring);
            for (j, name) in names.iter().enumerate() {
                let c = &b.matrix()[r][j];
                if !c.is_zero() {
                    form = form.add(&Polynomial::var_by_name(&ring, name).unwrap().scale(c));
                }
            }
            gens.push(form);
        }
    }
    let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
    if gb.is_unit_ideal() || dimension(&gb) != 0 {
        return Ok(false);
    }
    let mut rng = seeds.stream("cross-check-sep", fiber.depth as u64);
    let param = solve_zero_dim(gb.generators(), &mut rng)?;
    let roots = isolate_real_roots(&param.f, width);
    let nx = input.n();
    let mut projected: Vec<Vec<RatInterval>> = Vec::new();
    for root in &roots {
        let (_, cube) = evaluate_parameterization(&param, root, width)?;
        projected.push(cube[..nx].to_vec());
    }
    // every elimination-route point must meet some projected box
    for pt in route_points {
        let cube = pt.cube_a();
        if !projected.iter().any(|q| {
            q.iter().zip(&cube).all(|(a, b)| a.intersects(b))
        }) {
            return Ok(false);
        }
    }
    Ok(true)
}

// Refines both points until their boxes separate or both sit inside the
// certification width; overlapping at that width means the same point.
fn provably_distinct(p: &mut SamplePoint, q: &mut SamplePoint, cert: &BigRational) -> bool {
    loop {
        let bp = p.cube_x();
        let bq = q.cube_x();
        if bp.iter().zip(&bq).any(|(x, y)| !x.intersects(y)) {
            return true;
        }
        let wp = p.max_width();
        let wq = q.max_width();
        if &wp < cert && &wq < cert {
            return false;
        }
        if wp >= wq {
            p.refine();
        }
        if wq >= wp {
            q.refine();
        }
    }
}

/// Runs the whole pipeline: at least one certified point per connected
/// component of the real locus of the input variety.
pub fn sample_real_points(
    input: &InputSystem,
    seed: u64,
    width: &BigRational,
) -> Result<SampleReport, SampleError> {
    sample_real_points_opts(input, seed, width, SampleOptions::default())
}

pub fn sample_real_points_opts(
    input: &InputSystem,
    seed: u64,
    width: &BigRational,
    options: SampleOptions,
) -> Result<SampleReport, SampleError> {
    let seeds = SeedSource::new(seed);
    let gb_input = groebner_basis(input.polys(), MonomialOrder::DegRevLex);
    let dim = dimension(&gb_input);
    let component_bound = if dim >= 0 {
        betti_bound(input.degrees(), input.n(), dim as usize, input.assume_regular_sequence())
    } else {
        0
    };
    let mut report = SampleReport {
        seed,
        width: width.clone(),
        dimension: dim,
        depths: Vec::new(),
        points: Vec::new(),
        component_bound,
        input_polys: input.polys().to_vec(),
    };
    if dim < 0 {
        // empty complex variety: empty report is the correct answer
        return Ok(report);
    }
    let dim = dim as usize;

    let mut outcomes: Vec<DepthOutcome> = Vec::new();
    if options.parallel {
        let results: Vec<Result<DepthOutcome, SampleError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..=dim)
                .map(|depth| {
                    let width = width.clone();
                    scope.spawn(move || {
                        run_depth(input, &seeds, depth, dim, &width, options.cross_check)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("depth worker panicked")).collect()
        });
        for r in results {
            outcomes.push(r?);
        }
    } else {
        for depth in 0..=dim {
            outcomes.push(run_depth(input, &seeds, depth, dim, width, options.cross_check)?);
        }
    }

    let mut all_points: Vec<SamplePoint> = Vec::new();
    for outcome in &mut outcomes {
        report.depths.push(outcome.report.clone());
        all_points.append(&mut outcome.points);
    }

    // drop duplicates discovered at several depths
    let mut kept: Vec<SamplePoint> = Vec::new();
    'next: for mut candidate in all_points {
        for existing in &mut kept {
            if !provably_distinct(existing, &mut candidate, width) {
                continue 'next;
            }
        }
        kept.push(candidate);
    }

    // refine every survivor to the requested width in original coordinates
    for pt in &mut kept {
        let mut guard = 0;
        while &pt.max_width() >= width && !pt.root.is_point() {
            pt.refine();
            guard += 1;
            assert!(guard < 4096, "refinement failed to converge");
        }
    }

    // certify and emit
    let mut boxes: Vec<IsolatingBox> = Vec::new();
    for pt in &kept {
        let cube_x = pt.cube_x();
        let on_variety = verify_on_variety(&cube_x, input);
        let membership = if pt.depth < dim {
            let transformed = input.transformed_polys(&pt.a);
            let ring = input.ring().clone();
            let mut constraints = transformed;
            for m in 0..pt.depth {
                let pin = Polynomial::var(&ring, m).sub(&Polynomial::constant(
                    &ring,
                    pt.cube_a()[m].midpoint(),
                ));
                constraints.push(pin);
            }
            let objective = Polynomial::var(&ring, pt.depth);
            matches!(
                lagrange_membership_check_box(&pt.cube_a(), &constraints, &objective),
                Ok(true)
            )
        } else {
            // top depth: the fiber is the variety itself
            true
        };
        boxes.push(IsolatingBox {
            coords: cube_x,
            root: pt.root.clone(),
            fiber_depth: pt.depth,
            witness_seed: seed,
            on_variety,
            membership,
        });
    }
    boxes.sort_by(|a, b| {
        a.fiber_depth
            .cmp(&b.fiber_depth)
            .then_with(|| a.coords[0].lo.cmp(&b.coords[0].lo))
            .then_with(|| a.root.lo.cmp(&b.root.lo))
    });
    report.points = boxes;
    debug_assert!(report.points.len() as u128 <= report.component_bound.max(1));
    Ok(report)
}
