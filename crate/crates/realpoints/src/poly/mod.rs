//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every coefficient is a [`BigRational`] kept in lowest terms, so all
//! arithmetic in this module is exact. Terms are stored in a `BTreeMap`
//! keyed by exponent vector, which makes equality structural and iteration
//! deterministic.

mod block;
mod linear;
mod monomial;
mod parse;

pub use block::{bidegree_of, bihomogenize, dehomogenize, BiDegree, BlockError, BlockSplit};
pub use linear::{apply_linear_change, LinearChange, LinearChangeError};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, ParseError};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial ring `Q[v_0, ..., v_{m-1}]`, identified by its ordered
/// variable names. Cheap to clone and share.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(
            vars.iter().collect::<std::collections::BTreeSet<_>>().len() == vars.len(),
            "duplicate variable name"
        );
        Ring { vars: Arc::new(vars) }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// New ring with extra variables appended at the end.
    pub fn extend<S: Into<String>>(&self, extra: Vec<S>) -> Ring {
        let mut vars: Vec<String> = self.vars.as_ref().clone();
        vars.extend(extra.into_iter().map(Into::into));
        Ring::new(vars)
    }

    /// Picks a variable name not already used, starting from `base` and
    /// appending underscores until fresh.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(", "))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero and exponent vectors are unique
/// (the map key enforces the latter).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(n.into()))
    }

    pub fn var(ring: &Ring, idx: usize) -> Self {
        assert!(idx < ring.nvars());
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), idx), BigRational::one());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var_by_name(ring: &Ring, name: &str) -> Option<Self> {
        ring.var_index(name).map(|i| Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_coeff(&self) -> BigRational {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Max over terms of the exponent sum on the given variable indices.
    pub fn degree_on(&self, vars: &[usize]) -> u32 {
        self.terms.keys().map(|m| m.degree_on(vars)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact partial derivative with respect to variable `idx`.
    pub fn partial_derivative(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[idx] = e - 1;
                out.add_term(m2, c * BigRational::from_integer(e.into()));
            }
        }
        out
    }

    /// Substitutes every variable by the polynomial at the same index of
    /// `images` (all in the images' common ring).
    pub fn compose(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        for im in images {
            assert_eq!(im.ring(), target, "image ring mismatch");
        }
        let mut out = Polynomial::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Sets the variables at `idxs` to the given rational values.
    pub fn substitute_values(&self, subs: &[(usize, BigRational)]) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut k = c.clone();
            for (idx, val) in subs {
                let e = m2.0[*idx];
                if e > 0 {
                    m2.0[*idx] = 0;
                    let mut p = BigRational::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    k *= p;
                }
            }
            out.add_term(m2, k);
        }
        out
    }

    /// Evaluates at a full rational point (one value per ring variable).
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves this polynomial into a larger ring; `map[i]` is the index in
    /// `target` of variable `i` of the current ring.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[map[i]] += exp;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Embeds by variable name; every variable of the current ring must
    /// exist in `target`.
    pub fn embed_by_name(&self, target: &Ring) -> Polynomial {
        let map: Vec<usize> = self
            .ring
            .var_names()
            .iter()
            .map(|v| target.var_index(v).expect("missing variable in target ring"))
            .collect();
        self.embed(target, &map)
    }

    /// Projects onto a subring; panics if the support involves a dropped
    /// variable. Use after elimination.
    pub fn restrict_to(&self, target: &Ring) -> Polynomial {
        let map: Vec<Option<usize>> = self.ring.var_names().iter().map(|v| target.var_index(v)).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    let j = map[i].expect("support involves a variable outside the target ring");
                    e[j] += exp;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// True when no term involves any of the given variable indices.
    pub fn free_of(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|m| vars.iter().all(|&i| m.0[i] == 0))
    }

    /// Divides all coefficients by the content so the result has integer
    /// coefficients with gcd 1 and positive leading sign under the term
    /// order of the map. Used to tame coefficient growth.
    pub fn primitive_part(&self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * &den_lcm / c.denom();
            num_gcd = num_gcd.gcd(&n);
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        let scale = BigRational::new(den_lcm, num_gcd);
        let mut out = self.scale(&scale);
        // normalize the sign of the largest monomial's coefficient
        if let Some((_, c)) = out.terms.iter().next_back() {
            if c.is_negative() {
                out = out.neg();
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the textual grammar accepted by [`parse_polynomial`],
    /// highest total degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| b.0.cmp(a.0))
        });
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (vi, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_names()[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_names()[vi], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
