//! Hilbert bi-series of bi-homogeneous ideals: the table, its canonical
//! form, and the agreement of the two bi-degree routes.
//!
//! ```bash
//! cargo run -p realpoints --example hilbert_biseries
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realpoints::bihom::{
    bidegree_by_slicing, canonical_form_auto, hilbert_biseries, specialize_to_hilbert_series,
};
use realpoints::groebner::{dimension, groebner_basis, MonomialOrder};
use realpoints::poly::{parse_polynomial, BlockSplit, Ring};

fn main() {
    // the ring Q[X0, X1, l0, l1] split into an X block and an L block,
    // homogenizers first
    let ring = Ring::new(vec!["X0", "X1", "l0", "l1"]);
    let split = BlockSplit::new_homogenized(vec!["X0", "X1"], vec!["l0", "l1"]);
    let gens = vec![parse_polynomial("3*X0*l0 + 5*X0*l1 - 2*X1*l0 + 7*X1*l1", &ring).unwrap()];

    let table = hilbert_biseries(&ring, &gens, &split, 6, 6).unwrap();
    println!("dim(R_ij / I_ij) for a generic bilinear form:");
    for i in 0..=6 {
        let row: Vec<String> = (0..=6).map(|j| table.dim(i, j).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let h = specialize_to_hilbert_series(&table, 6).unwrap();
    println!("\nspecialized to t1 = t2 (single-graded Hilbert function):");
    println!("  {:?}", h);

    // the canonical form reads the bi-degrees off the top anti-diagonal
    let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
    let dim = dimension(&gb);
    let (_, cf) = canonical_form_auto(&ring, &gens, &split, dim).unwrap();
    println!("\ndimension {} so admissible pairs satisfy d + e + 2 = {}", dim, dim);
    for (&(d, e), &c) in &cf.c {
        println!("  C[{},{}] = {}", d, e, c);
    }

    // the second route: add generic block-linear forms and count the
    // quotient basis of the now zero-dimensional ideal
    println!("\ndouble-checking by generic slicing:");
    for (&(d, e), &c) in &cf.c {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let sliced = bidegree_by_slicing(&ring, &gens, &split, d, e, &mut rng).unwrap();
        println!("  C[{},{}]: canonical {} / slicing {}", d, e, c, sliced);
        assert_eq!(sliced as i64, c);
    }
    println!("strong bi-degree: {}", cf.c.values().sum::<i64>());
}
