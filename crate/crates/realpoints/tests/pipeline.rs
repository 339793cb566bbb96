//! Integration coverage of the sampling pipeline on the bundled fixtures,
//! beyond what the acceptance gate requires.

use num_rational::BigRational;
use realpoints::interval::eval_poly_box;
use realpoints::lagrange::InputSystem;
use realpoints::sampler::{sample_real_points, DepthStatus};
use realpoints::sysfile::parse_system;
use std::path::Path;

fn load(name: &str) -> InputSystem {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let sys = parse_system(&std::fs::read_to_string(path).unwrap()).unwrap();
    InputSystem::new(sys.polys, true, true).unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn torus_is_covered_and_certified() {
    let input = load("torus.sys");
    let report = sample_real_points(&input, 3, &rat(1, 1024)).unwrap();
    assert_eq!(report.dimension, 2);
    assert!(!report.points.is_empty());
    assert!(report.all_certified());
    assert!(report.points.len() as u128 <= report.component_bound);
    // every box straddles the quartic
    for p in &report.points {
        assert!(eval_poly_box(&input.polys()[0], &p.coords).contains_zero());
        // and lies inside the bounding shell |(x,y)| <= 3, |z| <= 1
        let three = rat(3, 1);
        assert!(p.coords[0].lo >= -three.clone() && p.coords[0].hi <= three);
    }
}

#[test]
fn sphere_depth_statuses() {
    let input = load("sphere.sys");
    let report = sample_real_points(&input, 1, &rat(1, 1024)).unwrap();
    assert_eq!(report.dimension, 2);
    assert_eq!(report.depths.len(), 3);
    // the equation count at each depth matches n + s below the top and
    // s + d at the top; indirectly visible through the solved degrees
    for d in &report.depths {
        match &d.status {
            DepthStatus::ZeroDimensional { degree } => assert!(*degree >= 1),
            DepthStatus::Inconsistent => {}
        }
    }
    // a unit sphere sample must stay inside [-1, 1]^3 up to box width
    for p in &report.points {
        for iv in &p.coords {
            assert!(iv.lo >= rat(-2, 1) && iv.hi <= rat(2, 1));
        }
    }
}

#[test]
fn duplicate_points_are_merged_across_depths() {
    // the sphere poles show up at several depths for axis-aligned draws;
    // whatever the draw, no two reported boxes may overlap
    let input = load("circle.sys");
    let report = sample_real_points(&input, 42, &rat(1, 1 << 20)).unwrap();
    for (i, p) in report.points.iter().enumerate() {
        for q in report.points.iter().skip(i + 1) {
            let overlap = p
                .coords
                .iter()
                .zip(&q.coords)
                .all(|(a, b)| a.intersects(b));
            assert!(!overlap, "reported boxes must be pairwise disjoint");
        }
    }
}

#[test]
fn report_width_is_respected() {
    let input = load("circle.sys");
    let width = rat(1, 1 << 16);
    let report = sample_real_points(&input, 2, &width).unwrap();
    for p in &report.points {
        for iv in &p.coords {
            assert!(iv.width() < width, "box wider than requested");
        }
    }
}

#[test]
fn hyperbola_branches_found_across_many_seeds() {
    let input = load("hyperbola.sys");
    for seed in 1..=6u64 {
        let report = sample_real_points(&input, seed, &rat(1, 1024)).unwrap();
        let zero = rat(0, 1);
        let pos = report.points.iter().any(|p| p.coords[0].lo > zero.clone());
        let neg = report.points.iter().any(|p| p.coords[0].hi < zero.clone());
        assert!(pos && neg, "seed {}: both branches must carry a sample", seed);
    }
}
