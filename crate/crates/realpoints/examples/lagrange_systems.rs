//! Building critical-point systems: general Lagrange, projection, the
//! regular-sequence reduction, and pinned fiber systems.
//!
//! ```bash
//! cargo run -p realpoints --example lagrange_systems
//! ```

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realpoints::groebner::{groebner_basis, quotient_basis, MonomialOrder};
use realpoints::lagrange::{
    build_fiber_system, build_lagrange, build_projection_system,
    build_reduced_projection_system, lagrange_membership_check, InputSystem,
};
use realpoints::poly::{parse_polynomial, LinearChange, Ring};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    let ring = Ring::new(vec!["x", "y"]);
    let circle = parse_polynomial("x^2 + y^2 - 1", &ring).unwrap();
    let input = InputSystem::new(vec![circle], true, true).unwrap();

    // critical points of the x-coordinate on the circle
    let objective = parse_polynomial("x", &ring).unwrap();
    let lagrange = build_lagrange(&input, &objective).unwrap();
    println!("Lagrange system for the objective x on the circle:");
    for p in lagrange.polys() {
        println!("  {} = 0", p);
    }

    // the projection system is the same thing with right-hand side e1
    let projection = build_projection_system(&input, &LinearChange::identity(2)).unwrap();
    assert_eq!(projection.polys(), lagrange.polys());

    // a regular sequence allows eliminating one multiplier entirely
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let reduced =
        build_reduced_projection_system(&input, &LinearChange::identity(2), &mut rng).unwrap();
    println!("\nreduced projection system (s = 1 leaves no multipliers):");
    for p in reduced.polys() {
        println!("  {} = 0", p);
    }
    let gb = groebner_basis(reduced.polys(), MonomialOrder::DegRevLex);
    println!("its degree: {} (sharp for the circle)", quotient_basis(&gb).unwrap().degree());

    // fiber systems pin leading coordinates; the top depth drops the
    // multipliers altogether
    let p = vec![rat(1, 3)];
    for depth in 0..=1usize {
        let fiber = build_fiber_system(&input, &LinearChange::identity(2), &p, depth, 1).unwrap();
        println!("\nfiber system at depth {}:", depth);
        for poly in fiber.system.polys() {
            println!("  {} = 0", poly);
        }
    }

    // membership: (1, 0) is critical for x on the circle, (0, 1) is not
    let pole = [rat(1, 1), rat(0, 1)];
    let side = [rat(0, 1), rat(1, 1)];
    let at_pole = lagrange_membership_check(&pole, input.polys(), &objective).unwrap();
    let at_side = lagrange_membership_check(&side, input.polys(), &objective).unwrap();
    println!("\ngradient-span membership: at (1,0): {}, at (0,1): {}", at_pole, at_side);
    assert!(at_pole && !at_side);
}
