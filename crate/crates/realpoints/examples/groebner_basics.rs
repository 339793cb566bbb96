//! Groebner bases: normal forms, dimension, elimination and degree by
//! generic slicing.
//!
//! ```bash
//! cargo run -p realpoints --example groebner_basics
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realpoints::groebner::{
    dimension, eliminate, groebner_basis, ideal_degree_by_slicing, normal_form, quotient_basis,
    MonomialOrder,
};
use realpoints::poly::{parse_polynomial, Polynomial, Ring};

fn main() {
    let ring = Ring::new(vec!["x", "y"]);
    let gens: Vec<Polynomial> = ["x^2 + y^2 - 1", "x - y"]
        .iter()
        .map(|t| parse_polynomial(t, &ring).unwrap())
        .collect();

    let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
    println!("reduced basis of the circle-meets-line ideal:");
    for g in gb.generators() {
        println!("  {}", g);
    }
    println!("dimension: {}", dimension(&gb));
    let qb = quotient_basis(&gb).unwrap();
    println!("degree (quotient dimension): {}", qb.degree());

    let probe = parse_polynomial("x^2", &ring).unwrap();
    println!("normal form of x^2: {}", normal_form(&probe, &gb));

    // implicitization by elimination: the cuspidal cubic
    let rty = Ring::new(vec!["t", "x", "y"]);
    let cusp_gens: Vec<Polynomial> = ["x - t^2", "y - t^3"]
        .iter()
        .map(|s| parse_polynomial(s, &rty).unwrap())
        .collect();
    println!("\neliminating t from x = t^2, y = t^3:");
    for g in eliminate(&cusp_gens, &["t"]) {
        println!("  {}", g);
    }

    // degree of a positive-dimensional ideal via random affine slices
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let circle = vec![parse_polynomial("x^2 + y^2 - 1", &ring).unwrap()];
    let deg = ideal_degree_by_slicing(&circle, 1, &mut rng).unwrap();
    println!("\ndegree of the circle by generic slicing: {}", deg);
    assert_eq!(deg, 2);
}
