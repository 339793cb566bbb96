//! Solving a zero-dimensional system into a rational univariate
//! parameterization, isolating real roots, and certifying boxes.
//!
//! ```bash
//! cargo run -p realpoints --example solve_zero_dimensional
//! ```

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realpoints::sampler::{
    check_parameterization, evaluate_parameterization, isolate_real_roots, solve_zero_dim,
};
use realpoints::poly::{parse_polynomial, Polynomial, Ring};

fn main() {
    // the circle cut by the vertical line x = 1/3
    let ring = Ring::new(vec!["x", "y"]);
    let gens: Vec<Polynomial> = ["x^2 + y^2 - 1", "x - 1/3"]
        .iter()
        .map(|t| parse_polynomial(t, &ring).unwrap())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let param = solve_zero_dim(&gens, &mut rng).unwrap();
    println!("separating form coefficients: {:?}", param.separating);
    println!("ideal degree: {}", param.ideal_degree);
    println!("f(T)  = {:?}", param.f);
    for (name, q) in param.coord_names.iter().zip(&param.coords) {
        println!("{}(T) = {:?}", name, q);
    }

    // the parameterization substitutes back to zero modulo f: an exact
    // polynomial identity, not a numerical check
    assert!(check_parameterization(&param, &gens));
    println!("substitution identity holds exactly");

    // isolate the real roots of f and push them through the coordinates
    let width = BigRational::new(1.into(), (1u64 << 30).into());
    let roots = isolate_real_roots(&param.f, &width);
    println!("\n{} real roots:", roots.len());
    for root in &roots {
        let (_, cube) = evaluate_parameterization(&param, root, &width).unwrap();
        let mid: Vec<String> = cube
            .iter()
            .map(|iv| format!("{:.8}", rational_to_f64(&iv.midpoint())))
            .collect();
        println!("  point ~ ({})", mid.join(", "));
        // y = +-sqrt(8)/3; every box must contain the true value
        assert!(cube[0].contains(&BigRational::new(1.into(), 3.into())));
    }
}

fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap()
}
