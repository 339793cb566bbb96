//! Groebner bases over the rationals via Buchberger's algorithm.
//!
//! The engine provides reduced bases, normal forms, Krull dimension,
//! quotient-ring bases of zero-dimensional ideals, elimination ideals, and
//! degree computation by generic affine slicing. Pair selection uses the
//! sugar strategy together with the product and chain criteria.

mod order;

pub use order::MonomialOrder;

use crate::poly::{Monomial, Polynomial, Ring};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(i64),
    #[error("generic slicing failed {attempts} times; the genericity set was repeatedly hit or the dimension claim is wrong")]
    SliceRetriesExhausted { attempts: usize },
}

/// A reduced Groebner basis: generators are monic and no term of any
/// generator is divisible by the leading monomial of another.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Polynomial>,
    leads: Vec<Monomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    /// True when the basis is `[1]`, i.e. the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

// Terms sorted descending under the active order; the working representation
// inside the division and completion loops.
#[derive(Clone)]
struct TermList {
    terms: Vec<(Monomial, BigRational)>,
}

impl TermList {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, BigRational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        TermList { terms }
    }

    fn into_poly(self, ring: &Ring) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in self.terms {
            p.add_term(m, c);
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, BigRational) {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c = &*c * &inv;
            }
        }
    }

    fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    // self - coeff * x^shift * g, both inputs sorted under `order`.
    fn sub_scaled(&self, g: &TermList, coeff: &BigRational, shift: &Monomial, order: &MonomialOrder) -> TermList {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(shift);
            match order.compare(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(&g.terms[j].1 * coeff)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 - &(&g.terms[j].1 * coeff);
                    if !c.is_zero() {
                        out.push((gm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(self.terms[i].clone());
            i += 1;
        }
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(shift), -(&g.terms[j].1 * coeff)));
            j += 1;
        }
        TermList { terms: out }
    }
}

// Full normal form of `f` against `basis`: every term of the remainder is
// reducible by no leading monomial.
fn reduce_full(f: &TermList, basis: &[TermList], order: &MonomialOrder) -> TermList {
    let mut tail = f.clone();
    let mut out: Vec<(Monomial, BigRational)> = Vec::new();
    'outer: while !tail.is_zero() {
        let (m, c) = tail.lead().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lead();
            if gm.divides(&m) {
                let shift = gm.div_into(&m);
                let coeff = &c / gc;
                tail = tail.sub_scaled(g, &coeff, &shift, order);
                continue 'outer;
            }
        }
        // irreducible leading term; move it to the remainder
        out.push((m, c));
        tail.terms.remove(0);
    }
    TermList { terms: out }
}

fn s_poly(f: &TermList, g: &TermList, order: &MonomialOrder) -> TermList {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let lcm = fm.lcm(gm);
    let sf = fm.div_into(&lcm);
    let sg = gm.div_into(&lcm);
    // (x^sf/lc(f)) * f - (x^sg/lc(g)) * g; shifting by a fixed monomial
    // preserves the term order, so no re-sort is needed
    let fscaled = TermList {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&sf), c / fc)).collect(),
    };
    fscaled.sub_scaled(g, &gc.recip(), &sg, order)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
/// The unit ideal yields the basis `[1]`; the zero ideal yields `[]`.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .unwrap_or_else(|| Ring::new(Vec::<String>::new()));
    for g in gens {
        assert_eq!(g.ring(), &ring, "generators must share one ring");
    }

    let mut basis: Vec<TermList> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut t = TermList::from_poly(g, &order);
        t.make_monic();
        sugars.push(t.total_degree());
        basis.push(t);
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |basis: &[TermList], sugars: &[u32], pairs: &mut Vec<Pair>, done: &mut BTreeSet<(usize, usize)>, new_idx: usize| {
        for i in 0..new_idx {
            let (mi, _) = basis[i].lead();
            let (mj, _) = basis[new_idx].lead();
            if mi.coprime(mj) {
                // product criterion: S-polynomial reduces to zero
                done.insert((i, new_idx));
                continue;
            }
            let lcm = mi.lcm(mj);
            let sugar = (sugars[i] - mi.total_degree())
                .max(sugars[new_idx] - mj.total_degree())
                + lcm.total_degree();
            pairs.push(Pair { i, j: new_idx, lcm, sugar });
        }
    };
    for idx in 0..basis.len() {
        push_pairs(&basis, &sugars, &mut pairs, &mut done, idx);
    }

    while !pairs.is_empty() {
        // sugar selection: smallest sugar, ties by lcm under the order
        let mut best = 0;
        for k in 1..pairs.len() {
            let p = &pairs[k];
            let b = &pairs[best];
            if p.sugar < b.sugar
                || (p.sugar == b.sugar && order.compare(&p.lcm, &b.lcm) == Ordering::Less)
            {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let key = (pair.i, pair.j);

        // chain criterion
        let mut skip = false;
        for (k, b) in basis.iter().enumerate() {
            if k == pair.i || k == pair.j || b.is_zero() {
                continue;
            }
            if b.lead().0.divides(&pair.lcm) {
                let k1 = (pair.i.min(k), pair.i.max(k));
                let k2 = (pair.j.min(k), pair.j.max(k));
                if done.contains(&k1) && done.contains(&k2) {
                    skip = true;
                    break;
                }
            }
        }
        done.insert(key);
        if skip {
            continue;
        }

        let s = s_poly(&basis[pair.i], &basis[pair.j], &order);
        let mut r = reduce_full(&s, &basis, &order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        // keep integer-sized coefficients in check between reductions
        let rp = r.into_poly(&ring).primitive_part();
        let mut r = TermList::from_poly(&rp, &order);
        r.make_monic();
        sugars.push(pair.sugar.max(r.total_degree()));
        basis.push(r);
        let new_idx = basis.len() - 1;
        push_pairs(&basis, &sugars, &mut pairs, &mut done, new_idx);
    }

    // minimalize: drop generators whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if basis[i].is_zero() {
            keep[i] = false;
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] || basis[j].is_zero() {
                continue;
            }
            let (mi, _) = basis[i].lead();
            let (mj, _) = basis[j].lead();
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<TermList> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| if k { Some(b) } else { None })
        .collect();

    // inter-reduce tails
    let mut reduced: Vec<TermList> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<TermList> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.clone())
            .collect();
        let mut r = reduce_full(&minimal[i], &others, &order);
        r.make_monic();
        reduced.push(r);
    }
    reduced.retain(|t| !t.is_zero());
    reduced.sort_by(|a, b| order.compare(&a.lead().0, &b.lead().0));

    let gens: Vec<Polynomial> = reduced.iter().map(|t| t.clone().into_poly(&ring)).collect();
    let leads: Vec<Monomial> = reduced.iter().map(|t| t.lead().0.clone()).collect();
    GroebnerBasis { ring, gens, leads, order }
}

/// Remainder of multivariate division of `f` by the basis; zero exactly
/// when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    assert_eq!(f.ring(), &g.ring, "ring mismatch");
    let lists: Vec<TermList> = g.gens.iter().map(|p| TermList::from_poly(p, &g.order)).collect();
    let ft = TermList::from_poly(f, &g.order);
    reduce_full(&ft, &lists, &g.order).into_poly(&g.ring)
}

/// Krull dimension of the quotient ring, read off the leading-term ideal:
/// the maximal size of a variable subset touched by no leading monomial's
/// support. The unit ideal reports -1.
pub fn dimension(g: &GroebnerBasis) -> i64 {
    if g.is_unit_ideal() {
        return -1;
    }
    let n = g.ring.nvars();
    let mut supports: Vec<u64> = g.leads.iter().map(|m| m.support_mask()).collect();
    supports.sort();
    supports.dedup();
    // drop supersets; minimal supports suffice
    let minimal: Vec<u64> = supports
        .iter()
        .filter(|&&s| !supports.iter().any(|&t| t != s && (t & s) == t))
        .cloned()
        .collect();
    // dimension = n - (minimum hitting set of the supports)
    n as i64 - min_hitting_set(&minimal, n) as i64
}

fn min_hitting_set(sets: &[u64], nvars: usize) -> usize {
    fn go(sets: &[u64], chosen: u32, best: &mut usize) {
        if chosen as usize >= *best {
            return;
        }
        let Some(&first) = sets.iter().find(|&&s| s != 0) else {
            *best = chosen as usize;
            return;
        };
        let mut s = first;
        while s != 0 {
            let v = s.trailing_zeros();
            s &= s - 1;
            let bit = 1u64 << v;
            let remaining: Vec<u64> = sets.iter().filter(|&&t| t & bit == 0).cloned().collect();
            go(&remaining, chosen + 1, best);
        }
    }
    let mut best = nvars + 1;
    go(sets, 0, &mut best);
    best.min(nvars)
}

/// Monomial basis of the quotient ring of a zero-dimensional ideal: all
/// monomials divisible by no leading monomial. Its cardinality is the
/// ideal's degree.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn degree(&self) -> usize {
        self.monomials.len()
    }
}

pub fn quotient_basis(g: &GroebnerBasis) -> Result<QuotientBasis, GroebnerError> {
    let dim = dimension(g);
    if dim != 0 {
        return Err(GroebnerError::NotZeroDimensional(dim));
    }
    let n = g.ring.nvars();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue = vec![Monomial::one(n)];
    while let Some(m) = queue.pop() {
        if seen.contains(&m) {
            continue;
        }
        if g.leads.iter().any(|lm| lm.divides(&m)) {
            continue;
        }
        for v in 0..n {
            let mut child = m.clone();
            child.0[v] += 1;
            queue.push(child);
        }
        seen.insert(m);
    }
    Ok(QuotientBasis { monomials: seen.into_iter().collect() })
}

/// Generators of the intersection of the ideal with the subring excluding
/// `drop_vars`, via a block elimination order.
pub fn eliminate(gens: &[Polynomial], drop_vars: &[&str]) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let drop_idx: Vec<usize> = drop_vars
        .iter()
        .map(|v| ring.var_index(v).expect("unknown variable to eliminate"))
        .collect();
    let order = MonomialOrder::Elimination { first_block: drop_idx.clone() };
    let gb = groebner_basis(gens, order);
    gb.generators()
        .iter()
        .filter(|g| g.free_of(&drop_idx))
        .cloned()
        .collect()
}

/// Degree of an ideal of known dimension, computed by adding that many
/// random affine linear forms and counting the quotient basis of the
/// resulting zero-dimensional ideal. Coefficients are drawn uniformly from
/// `[-997, 997]`; degenerate slices are redrawn up to 5 times.
pub fn ideal_degree_by_slicing<R: Rng>(
    gens: &[Polynomial],
    target_dim: usize,
    rng: &mut R,
) -> Result<usize, GroebnerError> {
    const BOUND: i64 = 997;
    const ATTEMPTS: usize = 5;
    let ring = gens.first().expect("need at least one generator").ring().clone();
    for _ in 0..ATTEMPTS {
        let mut sliced = gens.to_vec();
        for _ in 0..target_dim {
            let mut form = Polynomial::from_int(&ring, rng.gen_range(-BOUND..=BOUND));
            for v in 0..ring.nvars() {
                let c = rng.gen_range(-BOUND..=BOUND);
                if c != 0 {
                    form = form.add(&Polynomial::var(&ring, v).scale(&BigRational::from_integer(c.into())));
                }
            }
            sliced.push(form);
        }
        let gb = groebner_basis(&sliced, MonomialOrder::DegRevLex);
        if gb.is_unit_ideal() {
            if target_dim == 0 {
                // genuinely empty, not a bad slice
                return Ok(0);
            }
            continue;
        }
        match quotient_basis(&gb) {
            Ok(qb) => return Ok(qb.degree()),
            Err(_) => continue,
        }
    }
    Err(GroebnerError::SliceRetriesExhausted { attempts: ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring_xy() -> Ring {
        Ring::new(vec!["x", "y"])
    }

    fn parse_all(ring: &Ring, texts: &[&str]) -> Vec<Polynomial> {
        texts.iter().map(|t| parse_polynomial(t, ring).unwrap()).collect()
    }

    #[test]
    fn already_reduced_linear_basis() {
        let r = ring_xy();
        let gens = parse_all(&r, &["x - 1", "y - 2"]);
        let gb = groebner_basis(&gens, MonomialOrder::Lex);
        assert_eq!(gb.generators().len(), 2);
        assert_eq!(gb.generators()[0], parse_polynomial("y - 2", &r).unwrap());
        assert_eq!(gb.generators()[1], parse_polynomial("x - 1", &r).unwrap());
    }

    #[test]
    fn containment_collapses() {
        let r = Ring::new(vec!["x"]);
        let gens = parse_all(&r, &["x^2", "x"]);
        let gb = groebner_basis(&gens, MonomialOrder::Lex);
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(gb.generators()[0], parse_polynomial("x", &r).unwrap());
    }

    #[test]
    fn circle_meets_line_colength_two() {
        let r = ring_xy();
        let gens = parse_all(&r, &["x^2 + y^2 - 1", "x - y"]);
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        let qb = quotient_basis(&gb).unwrap();
        assert_eq!(qb.degree(), 2);
    }

    #[test]
    fn normal_form_of_members_is_zero() {
        let r = ring_xy();
        let gens = parse_all(&r, &["x^2 + y^2 - 1", "x - y"]);
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        for g in &gens {
            assert!(normal_form(g, &gb).is_zero());
        }
        let one = Polynomial::one(&r);
        assert_eq!(normal_form(&one, &gb), one);
    }

    #[test]
    fn normal_form_single_division() {
        let r = ring_xy();
        let gens = parse_all(&r, &["x^2 + y^2 - 1"]);
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        let f = parse_polynomial("x^2", &r).unwrap();
        let nf = normal_form(&f, &gb);
        assert_eq!(nf, parse_polynomial("1 - y^2", &r).unwrap());
    }

    #[test]
    fn normal_form_idempotent() {
        let r = ring_xy();
        let gens = parse_all(&r, &["x^2 + y^2 - 1", "x*y - 2"]);
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        let f = parse_polynomial("x^3*y + x*y^3 - 7*x + 1", &r).unwrap();
        let n1 = normal_form(&f, &gb);
        let n2 = normal_form(&n1, &gb);
        assert_eq!(n1, n2);
    }

    #[test]
    fn dimension_point_line_unit() {
        let r = ring_xy();
        let point = groebner_basis(&parse_all(&r, &["x", "y"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&point), 0);
        let unit = groebner_basis(&parse_all(&r, &["1"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&unit), -1);
        let two_lines = groebner_basis(&parse_all(&r, &["x*y"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&two_lines), 1);
    }

    #[test]
    fn quotient_basis_examples() {
        let r = ring_xy();
        let gb = groebner_basis(&parse_all(&r, &["x^2", "y"]), MonomialOrder::DegRevLex);
        let qb = quotient_basis(&gb).unwrap();
        assert_eq!(qb.degree(), 2);
        assert!(qb.monomials.contains(&Monomial::one(2)));
        assert!(qb.monomials.contains(&Monomial::var(2, 0)));
        // closed under division
        for m in &qb.monomials {
            for v in 0..2 {
                if m.0[v] > 0 {
                    let mut div = m.clone();
                    div.0[v] -= 1;
                    assert!(qb.monomials.contains(&div));
                }
            }
        }

        let gb = groebner_basis(&parse_all(&r, &["x - 1", "y - 2"]), MonomialOrder::DegRevLex);
        assert_eq!(quotient_basis(&gb).unwrap().degree(), 1);

        let gb = groebner_basis(&parse_all(&r, &["x*y"]), MonomialOrder::DegRevLex);
        assert!(matches!(quotient_basis(&gb), Err(GroebnerError::NotZeroDimensional(1))));
    }

    #[test]
    fn eliminate_substitution() {
        let r = Ring::new(vec!["l", "x"]);
        let gens = parse_all(&r, &["l - x", "x^2 - 1"]);
        let out = eliminate(&gens, &["l"]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0], parse_polynomial("x^2 - 1", &r).unwrap());
    }

    #[test]
    fn eliminate_cusp_implicitization() {
        let r = Ring::new(vec!["t", "x", "y"]);
        let gens = parse_all(&r, &["x - t^2", "y - t^3"]);
        let out = eliminate(&gens, &["t"]);
        let cusp = parse_polynomial("y^2 - x^3", &r).unwrap();
        let gb = groebner_basis(&out, MonomialOrder::DegRevLex);
        assert!(gb.contains(&cusp));
        // and the eliminated generators stay inside the original ideal
        let full = groebner_basis(&gens, MonomialOrder::DegRevLex);
        for g in &out {
            assert!(full.contains(g));
        }
    }

    #[test]
    fn eliminate_unit_ideal() {
        let r = ring_xy();
        let gens = parse_all(&r, &["1"]);
        let out = eliminate(&gens, &["x"]);
        assert_eq!(out.len(), 1);
        assert!(out[0].is_constant());
    }

    #[test]
    fn slicing_degrees() {
        let r = ring_xy();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let circle = parse_all(&r, &["x^2 + y^2 - 1"]);
        assert_eq!(ideal_degree_by_slicing(&circle, 1, &mut rng).unwrap(), 2);
        let point = parse_all(&r, &["x - 1", "y - 2"]);
        assert_eq!(ideal_degree_by_slicing(&point, 0, &mut rng).unwrap(), 1);
        let hyperbola = parse_all(&r, &["x*y - 1"]);
        assert_eq!(ideal_degree_by_slicing(&hyperbola, 1, &mut rng).unwrap(), 2);
    }

    #[test]
    fn slicing_stable_across_seeds() {
        let r = ring_xy();
        let circle = parse_all(&r, &["x^2 + y^2 - 1"]);
        for seed in [1u64, 2, 3] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            assert_eq!(ideal_degree_by_slicing(&circle, 1, &mut rng).unwrap(), 2);
        }
    }

    #[test]
    fn buchberger_criterion_on_reduced_bases() {
        let r = ring_xy();
        for gens in [
            parse_all(&r, &["x^2 + y^2 - 1", "x - y"]),
            parse_all(&r, &["x^2 + y^2 - 1", "x*y - 2"]),
            parse_all(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
        ] {
            let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
            let lists: Vec<Polynomial> = gb.generators().to_vec();
            for i in 0..lists.len() {
                for j in i + 1..lists.len() {
                    let ti = TermList::from_poly(&lists[i], gb.order());
                    let tj = TermList::from_poly(&lists[j], gb.order());
                    let s = s_poly(&ti, &tj, gb.order()).into_poly(gb.ring());
                    assert!(normal_form(&s, &gb).is_zero(), "S-polynomial did not reduce to zero");
                }
            }
        }
    }

    #[test]
    fn reduced_basis_property() {
        // no term of any generator is divisible by the lead of another
        let r = ring_xy();
        let gens = parse_all(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        let gb = groebner_basis(&gens, MonomialOrder::DegRevLex);
        for (i, g) in gb.generators().iter().enumerate() {
            for (m, _) in g.terms() {
                for (j, lm) in gb.leading_monomials().iter().enumerate() {
                    if i != j {
                        assert!(!lm.divides(m), "basis not reduced");
                    }
                }
            }
        }
    }
}
