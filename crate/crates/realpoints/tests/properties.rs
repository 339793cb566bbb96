//! Property tests for the algebraic kernels.

use num_rational::BigRational;
use proptest::prelude::*;
use realpoints::groebner::{groebner_basis, normal_form, MonomialOrder};
use realpoints::poly::{
    apply_linear_change, bidegree_of, bihomogenize, dehomogenize, parse_polynomial, BlockSplit,
    LinearChange, Monomial, Polynomial, Ring,
};

fn ring3() -> Ring {
    Ring::new(vec!["x", "y", "z"])
}

// Small random polynomials in up to three variables.
fn arb_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
    let nvars = ring.nvars();
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, nvars),
            -9i64..=9,
            1i64..=4,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(&ring);
        for (expo, num, den) in terms {
            p.add_term(Monomial(expo), BigRational::new(num.into(), den.into()));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold_exactly(
        f in arb_poly(ring3()),
        g in arb_poly(ring3()),
        h in arb_poly(ring3()),
    ) {
        // associativity and distributivity with no coefficient drift
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.sub(&f), Polynomial::zero(&ring3()));
    }

    #[test]
    fn display_parse_round_trip(f in arb_poly(ring3())) {
        let text = f.to_string();
        let back = parse_polynomial(&text, &ring3()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn homogenization_round_trip(f in arb_poly(ring3())) {
        let split = BlockSplit::new(vec!["x", "y"], vec!["z"]);
        let (hom, ext) = bihomogenize(&f, &split).unwrap();
        let (_, uniform) = bidegree_of(&hom, &ext);
        prop_assert!(uniform);
        let back = dehomogenize(&hom, &ext).restrict_to(&ring3());
        prop_assert_eq!(back, f);
    }

    #[test]
    fn linear_change_round_trip(f in arb_poly(ring3()), which in 0usize..3) {
        let a = match which {
            0 => LinearChange::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap(),
            1 => LinearChange::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[2, 0, 1]]).unwrap(),
            _ => LinearChange::from_int_rows(&[&[2, 1, 1], &[1, 1, 0], &[1, 0, 2]]).unwrap(),
        };
        let moved = apply_linear_change(&f, &a, &["x", "y", "z"]).unwrap();
        let back = apply_linear_change(&moved, &a.inverse(), &["x", "y", "z"]).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        f in arb_poly(ring3()),
        g in arb_poly(ring3()),
    ) {
        let ring = ring3();
        let gens = vec![
            parse_polynomial("x^2 + y^2 - 1", &ring).unwrap(),
            parse_polynomial("x*y - z", &ring).unwrap(),
        ];
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        let nf = normal_form(&f, &gb);
        prop_assert_eq!(normal_form(&nf, &gb), nf.clone());
        // linearity: NF(f + g) = NF(f) + NF(g)
        let sum = normal_form(&f.add(&g), &gb);
        prop_assert_eq!(sum, nf.add(&normal_form(&g, &gb)));
    }
}
