//! Variable blocks and bi-grading.
//!
//! A [`BlockSplit`] partitions the ring variables into an X block (the
//! geometric coordinates) and an L block (the multipliers). A polynomial is
//! bi-homogeneous when every term has the same pair of block degrees; that
//! pair is its [`BiDegree`].

use super::{Monomial, Polynomial, Ring};
use thiserror::Error;

/// Block degree pair `(alpha, beta)`: degree in the X block, degree in the
/// L block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiDegree {
    pub alpha: u32,
    pub beta: u32,
}

impl BiDegree {
    pub fn new(alpha: u32, beta: u32) -> Self {
        BiDegree { alpha, beta }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("variable `{0}` is not in the ring")]
    UnknownVariable(String),
    #[error("blocks must be disjoint and cover the ring (`{0}` misplaced)")]
    BadCover(String),
    #[error("polynomial involves the homogenizing variable `{0}`")]
    InvolvesHomogenizer(String),
}

/// Partition of the ring variables into the X block and the L block.
///
/// When a homogenizing variable is present it is the *first* name of its
/// block and the corresponding flag is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    x_vars: Vec<String>,
    l_vars: Vec<String>,
    x0_present: bool,
    l0_present: bool,
}

impl BlockSplit {
    pub fn new<S: Into<String>>(x_vars: Vec<S>, l_vars: Vec<S>) -> Self {
        BlockSplit {
            x_vars: x_vars.into_iter().map(Into::into).collect(),
            l_vars: l_vars.into_iter().map(Into::into).collect(),
            x0_present: false,
            l0_present: false,
        }
    }

    /// Split whose blocks already contain homogenizing variables as their
    /// first entries.
    pub fn new_homogenized<S: Into<String>>(x_vars: Vec<S>, l_vars: Vec<S>) -> Self {
        let mut s = Self::new(x_vars, l_vars);
        s.x0_present = true;
        s.l0_present = !s.l_vars.is_empty();
        s
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn l_vars(&self) -> &[String] {
        &self.l_vars
    }

    pub fn x0_present(&self) -> bool {
        self.x0_present
    }

    pub fn l0_present(&self) -> bool {
        self.l0_present
    }

    /// Checks that the blocks are disjoint and exactly cover `ring`.
    pub fn validate(&self, ring: &Ring) -> Result<(), BlockError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in self.x_vars.iter().chain(&self.l_vars) {
            if ring.var_index(v).is_none() {
                return Err(BlockError::UnknownVariable(v.clone()));
            }
            if !seen.insert(v.clone()) {
                return Err(BlockError::BadCover(v.clone()));
            }
        }
        if seen.len() != ring.nvars() {
            let missing = ring
                .var_names()
                .iter()
                .find(|v| !seen.contains(*v))
                .cloned()
                .unwrap_or_default();
            return Err(BlockError::BadCover(missing));
        }
        Ok(())
    }

    pub fn x_indices(&self, ring: &Ring) -> Vec<usize> {
        self.x_vars.iter().map(|v| ring.var_index(v).expect("x var missing")).collect()
    }

    pub fn l_indices(&self, ring: &Ring) -> Vec<usize> {
        self.l_vars.iter().map(|v| ring.var_index(v).expect("l var missing")).collect()
    }

    /// Block degrees of a monomial.
    pub fn bidegree_of_monomial(&self, ring: &Ring, m: &Monomial) -> BiDegree {
        let xi = self.x_indices(ring);
        let li = self.l_indices(ring);
        BiDegree::new(m.degree_on(&xi), m.degree_on(&li))
    }
}

/// Maximum block degrees over the support together with a flag telling
/// whether every term attains exactly that pair.
pub fn bidegree_of(f: &Polynomial, split: &BlockSplit) -> (BiDegree, bool) {
    let ring = f.ring();
    let xi = split.x_indices(ring);
    let li = split.l_indices(ring);
    let mut alpha = 0u32;
    let mut beta = 0u32;
    let mut first = true;
    let mut uniform = true;
    for (m, _) in f.terms() {
        let a = m.degree_on(&xi);
        let b = m.degree_on(&li);
        if first {
            alpha = a;
            beta = b;
            first = false;
        } else {
            if a != alpha || b != beta {
                uniform = false;
            }
            alpha = alpha.max(a);
            beta = beta.max(b);
        }
    }
    (BiDegree::new(alpha, beta), uniform)
}

/// Bi-homogenizes `f` over the ring extended with fresh homogenizing
/// variables, one per block.
///
/// The result is bi-homogeneous of bi-degree `(deg_X f, deg_L f)` where the
/// block degrees are maxima over the support. Returns the new polynomial
/// together with the extended split; the extended ring appends the X
/// homogenizer and then the L homogenizer after the original variables.
pub fn bihomogenize(f: &Polynomial, split: &BlockSplit) -> Result<(Polynomial, BlockSplit), BlockError> {
    if split.x0_present {
        return Err(BlockError::InvolvesHomogenizer(split.x_vars[0].clone()));
    }
    if split.l0_present {
        return Err(BlockError::InvolvesHomogenizer(split.l_vars[0].clone()));
    }
    let ring = f.ring();
    let x0_name = ring.fresh_name("X0");
    let mut tmp = ring.extend(vec![x0_name.clone()]);
    let l0_name = tmp.fresh_name("l0");
    tmp = tmp.extend(vec![l0_name.clone()]);
    let target = tmp;

    let xi = split.x_indices(ring);
    let li = split.l_indices(ring);
    let deg_x = f.degree_on(&xi);
    let deg_l = f.degree_on(&li);
    let x0_idx = target.var_index(&x0_name).unwrap();
    let l0_idx = target.var_index(&l0_name).unwrap();

    let mut out = Polynomial::zero(&target);
    for (m, c) in f.terms() {
        let mut e = vec![0u32; target.nvars()];
        e[..m.nvars()].copy_from_slice(&m.0);
        e[x0_idx] = deg_x - m.degree_on(&xi);
        e[l0_idx] = deg_l - m.degree_on(&li);
        out.add_term(Monomial(e), c.clone());
    }

    let mut x_vars = vec![x0_name];
    x_vars.extend(split.x_vars.iter().cloned());
    let mut l_vars = vec![l0_name];
    l_vars.extend(split.l_vars.iter().cloned());
    let ext = BlockSplit { x_vars, l_vars, x0_present: true, l0_present: true };
    Ok((out, ext))
}

/// Substitutes 1 for the homogenizing variables of each block that has one.
/// Polynomials not involving them pass through unchanged.
pub fn dehomogenize(f: &Polynomial, split: &BlockSplit) -> Polynomial {
    use num_rational::BigRational;
    use num_traits::One;
    let ring = f.ring();
    let mut subs: Vec<(usize, BigRational)> = Vec::new();
    if split.x0_present {
        if let Some(i) = ring.var_index(&split.x_vars[0]) {
            subs.push((i, BigRational::one()));
        }
    }
    if split.l0_present {
        if let Some(i) = ring.var_index(&split.l_vars[0]) {
            subs.push((i, BigRational::one()));
        }
    }
    if subs.is_empty() {
        return f.clone();
    }
    f.substitute_values(&subs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    #[test]
    fn bidegree_single_monomial() {
        let r = Ring::new(vec!["X0", "X1", "l0"]);
        let split = BlockSplit::new_homogenized(vec!["X0", "X1"], vec!["l0"]);
        let f = parse_polynomial("X0*X1*l0", &r).unwrap();
        let (d, hom) = bidegree_of(&f, &split);
        assert_eq!(d, BiDegree::new(2, 1));
        assert!(hom);
    }

    #[test]
    fn bidegree_mixed_components() {
        let r = Ring::new(vec!["X0", "X1", "l0"]);
        let split = BlockSplit::new_homogenized(vec!["X0", "X1"], vec!["l0"]);
        let f = parse_polynomial("X0 + l0", &r).unwrap();
        let (d, hom) = bidegree_of(&f, &split);
        assert_eq!(d, BiDegree::new(1, 1));
        assert!(!hom);
    }

    #[test]
    fn bidegree_two_terms_same_pair() {
        let r = Ring::new(vec!["X0", "X1", "l0"]);
        let split = BlockSplit::new_homogenized(vec!["X0", "X1"], vec!["l0"]);
        let f = parse_polynomial("X0^2*l0 + X0*X1*l0", &r).unwrap();
        let (d, hom) = bidegree_of(&f, &split);
        assert_eq!(d, BiDegree::new(2, 1));
        assert!(hom);
    }

    #[test]
    fn bihomogenize_bilinear_minus_one() {
        let r = Ring::new(vec!["X1", "l1"]);
        let split = BlockSplit::new(vec!["X1"], vec!["l1"]);
        let f = parse_polynomial("X1*l1 - 1", &r).unwrap();
        let (g, ext) = bihomogenize(&f, &split).unwrap();
        let er = g.ring().clone();
        let expect = parse_polynomial("X1*l1 - X0*l0", &er).unwrap();
        assert_eq!(g, expect);
        let (d, hom) = bidegree_of(&g, &ext);
        assert!(hom);
        assert_eq!(d, BiDegree::new(1, 1));
    }

    #[test]
    fn bihomogenize_pure_x_variable() {
        let r = Ring::new(vec!["X1", "l1"]);
        let split = BlockSplit::new(vec!["X1"], vec!["l1"]);
        let f = parse_polynomial("X1", &r).unwrap();
        let (g, ext) = bihomogenize(&f, &split).unwrap();
        // deg_l = 0 so the l homogenizer does not appear
        let l0 = g.ring().var_index(ext.l_vars()[0].as_str()).unwrap();
        assert!(g.free_of(&[l0]));
        let (d, _) = bidegree_of(&g, &ext);
        assert_eq!(d, BiDegree::new(1, 0));
    }

    #[test]
    fn bihomogenize_mixed_degrees() {
        let r = Ring::new(vec!["X1", "X2"]);
        let split = BlockSplit::new(vec!["X1", "X2"], Vec::new());
        let f = parse_polynomial("X1^2 + X2", &r).unwrap();
        let (g, _) = bihomogenize(&f, &split).unwrap();
        let er = g.ring().clone();
        let expect = parse_polynomial("X1^2 + X2*X0", &er).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn dehomogenize_inverts_bihomogenize() {
        let r = Ring::new(vec!["X1", "l1"]);
        let split = BlockSplit::new(vec!["X1"], vec!["l1"]);
        let f = parse_polynomial("X1*l1 - 1", &r).unwrap();
        let (g, ext) = bihomogenize(&f, &split).unwrap();
        let back = dehomogenize(&g, &ext).restrict_to(&r);
        assert_eq!(back, f);
    }

    #[test]
    fn dehomogenize_powers_of_x0() {
        let r = Ring::new(vec!["X0", "X1", "l0"]);
        let split = BlockSplit::new_homogenized(vec!["X0", "X1"], vec!["l0"]);
        let f = parse_polynomial("X0^3", &r).unwrap();
        assert_eq!(dehomogenize(&f, &split), Polynomial::one(&r));
        let g = parse_polynomial("X1^2", &r).unwrap();
        assert_eq!(dehomogenize(&g, &split), g);
    }
}
