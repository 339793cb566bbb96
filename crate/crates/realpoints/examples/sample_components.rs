//! Component coverage on varied topologies: two disjoint circles, the two
//! branches of a hyperbola, an empty real locus, and a torus.
//!
//! ```bash
//! cargo run -p realpoints --example sample_components
//! ```

use num_rational::BigRational;
use num_traits::ToPrimitive;
use realpoints::lagrange::InputSystem;
use realpoints::poly::{parse_polynomial, Ring};
use realpoints::sampler::sample_real_points;

fn approx(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap()
}

fn run(name: &str, vars: Vec<&str>, poly: &str) {
    let ring = Ring::new(vars);
    let f = parse_polynomial(poly, &ring).unwrap();
    let input = InputSystem::new(vec![f], true, true).unwrap();
    let width = BigRational::new(1.into(), 4096.into());
    let report = sample_real_points(&input, 7, &width).unwrap();
    println!("{} ({} points, bound {}):", name, report.points.len(), report.component_bound);
    for p in &report.points {
        let mid: Vec<String> =
            p.coords.iter().map(|iv| format!("{:8.4}", approx(&iv.midpoint()))).collect();
        println!(
            "  depth {}: ({})  on-variety {}  membership {}",
            p.fiber_depth,
            mid.join(", "),
            p.on_variety,
            p.membership
        );
    }
    assert!(report.all_certified());
    println!();
}

fn main() {
    run(
        "two disjoint unit circles around (0,0) and (3,0)",
        vec!["x", "y"],
        "x^4 + 2*x^2*y^2 + y^4 - 6*x^3 - 6*x*y^2 + 7*x^2 + 7*y^2 + 6*x - 8",
    );
    run("hyperbola x*y = 1", vec!["x", "y"], "x*y - 1");
    run("empty real locus x^2 + y^2 + 1", vec!["x", "y"], "x^2 + y^2 + 1");
    run(
        "torus around the z-axis (R = 2, r = 1)",
        vec!["x", "y", "z"],
        "x^4 + y^4 + z^4 + 2*x^2*y^2 + 2*x^2*z^2 + 2*y^2*z^2 - 10*x^2 - 10*y^2 + 6*z^2 + 9",
    );
}
