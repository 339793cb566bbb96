//! The closed-form bound calculators and how they relate.
//!
//! ```bash
//! cargo run -p realpoints --example bounds
//! ```

use realpoints::bihom::{
    bezout_bound, betti_bound, critical_bound, thom_milnor_bound, BoundInputs,
};
use realpoints::poly::BiDegree;

fn main() {
    // bi-homogeneous Bezout count over two blocks of sizes (n, k)
    let inputs = BoundInputs::new(2, 1, vec![BiDegree::new(2, 1), BiDegree::new(1, 1)]).unwrap();
    println!("bezout bound for bi-degrees (2,1), (1,1) over blocks (2,1): {}", bezout_bound(&inputs));

    // a critical-point system for s constraints of degrees D_i in n
    // variables bi-homogenizes into s rows of bi-degree (D_i, 0) plus n
    // rows of bi-degree (D-1, 1); its Bezout count collapses to the
    // critical bound
    let degrees = [3u32, 2];
    let (n, s) = (5usize, degrees.len());
    let dmax = *degrees.iter().max().unwrap();
    let mut bids: Vec<BiDegree> = degrees.iter().map(|&x| BiDegree::new(x, 0)).collect();
    bids.extend(std::iter::repeat_n(BiDegree::new(dmax - 1, 1), n));
    let shape = BoundInputs::new(n, s, bids).unwrap();
    let via_bezout = bezout_bound(&shape);
    let direct = critical_bound(&degrees, n, false).unwrap();
    println!("\ncritical bound two ways (degrees {:?}, n = {}):", degrees, n);
    println!("  via the bi-homogeneous Bezout count: {}", via_bezout);
    println!("  via the closed formula:              {}", direct);
    assert_eq!(via_bezout, direct);

    // summing per-fiber critical counts bounds the number of connected
    // components; always at most the Thom-Milnor style bound
    println!("\ncomponent bounds vs Thom-Milnor (s = 1, varying D and n):");
    println!("{:>4} {:>4} {:>14} {:>14} {:>16}", "D", "n", "general", "regular", "thom-milnor");
    for d in 2..=4u32 {
        for n in 2..=5usize {
            let tm = thom_milnor_bound(d, n);
            let general = betti_bound(&[d], n, n - 1, false);
            let regular = betti_bound(&[d], n, n - 1, true);
            assert!(general <= tm && regular <= tm);
            println!("{:>4} {:>4} {:>14} {:>14} {:>16}", d, n, general, regular, tm);
        }
    }
}
