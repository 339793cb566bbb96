//! The whole pipeline on the smallest example: certified points on the
//! unit circle.
//!
//! ```bash
//! cargo run -p realpoints --example sample_circle
//! ```

use num_rational::BigRational;
use realpoints::lagrange::InputSystem;
use realpoints::poly::{parse_polynomial, Ring};
use realpoints::report::render_sample_report;
use realpoints::sampler::sample_real_points;

fn main() {
    let ring = Ring::new(vec!["x", "y"]);
    let circle = parse_polynomial("x^2 + y^2 - 1", &ring).unwrap();
    let input = InputSystem::new(vec![circle], true, true).unwrap();

    let width = BigRational::new(1.into(), 1048576.into());
    let report = sample_real_points(&input, 42, &width).unwrap();

    println!("{}", render_sample_report(&report, &ring));
    assert!(!report.points.is_empty());
    assert!(report.all_certified());
    assert!(report.points.len() as u128 <= report.component_bound);
    eprintln!(
        "{} certified points, component bound {}",
        report.points.len(),
        report.component_bound
    );
}
