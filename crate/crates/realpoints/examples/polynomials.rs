//! Exact polynomial arithmetic, variable blocks and bi-homogenization.
//!
//! ```bash
//! cargo run -p realpoints --example polynomials
//! ```

use realpoints::poly::{
    apply_linear_change, bidegree_of, bihomogenize, dehomogenize, parse_polynomial, BlockSplit,
    LinearChange, Ring,
};

fn main() {
    // every coefficient is an exact rational; nothing is ever rounded
    let ring = Ring::new(vec!["x", "y"]);
    let f = parse_polynomial("x^2 + y^2 - 1", &ring).unwrap();
    let g = parse_polynomial("2/3*x*y - x*y", &ring).unwrap();
    println!("f        = {}", f);
    println!("g        = {} (coefficients cancel exactly)", g);
    println!("f * g    = {}", f.mul(&g));
    println!("df/dx    = {}", f.partial_derivative(0));

    // blocks split the variables into coordinates and multipliers
    let rl = Ring::new(vec!["x1", "l1"]);
    let split = BlockSplit::new(vec!["x1"], vec!["l1"]);
    let h = parse_polynomial("x1*l1 - 1", &rl).unwrap();
    let (hom, ext) = bihomogenize(&h, &split).unwrap();
    let (bideg, uniform) = bidegree_of(&hom, &ext);
    println!("\nh              = {}", h);
    println!("bihomogenized  = {}", hom);
    println!("bi-degree      = ({}, {}), uniform: {}", bideg.alpha, bideg.beta, uniform);
    let back = dehomogenize(&hom, &ext).restrict_to(&rl);
    assert_eq!(back, h);
    println!("dehomogenized back to h: ok");

    // linear changes of variables expand exactly
    let shear = LinearChange::from_int_rows(&[&[1, 1], &[0, 1]]).unwrap();
    let sheared = apply_linear_change(&f, &shear, &["x", "y"]).unwrap();
    println!("\nf under x -> x + y: {}", sheared);
    let undone = apply_linear_change(&sheared, &shear.inverse(), &["x", "y"]).unwrap();
    assert_eq!(undone, f);
    println!("inverse change restores f: ok");
}
