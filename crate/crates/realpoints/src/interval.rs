//! Interval arithmetic with exact rational endpoints.
//!
//! Operations are inclusion-monotone: evaluating the same expression over a
//! nested sub-interval yields a nested result. That is what makes box
//! refinement converge and certificates sound.

use crate::poly::Polynomial;
use crate::upoly::UPoly;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(c: BigRational) -> Self {
        RatInterval { lo: c.clone(), hi: c }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            RatInterval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Division; the divisor must not contain zero.
    pub fn div(&self, other: &RatInterval) -> Option<RatInterval> {
        if other.contains_zero() {
            return None;
        }
        let inv = RatInterval { lo: other.hi.recip(), hi: other.lo.recip() };
        Some(self.mul(&inv))
    }

    pub fn pow(&self, n: u32) -> RatInterval {
        if n == 0 {
            return RatInterval::point(BigRational::one());
        }
        let lp = power(&self.lo, n);
        let hp = power(&self.hi, n);
        if n % 2 == 1 {
            RatInterval { lo: lp, hi: hp }
        } else if !self.contains_zero() {
            RatInterval { lo: lp.clone().min(hp.clone()), hi: lp.max(hp) }
        } else {
            RatInterval { lo: BigRational::zero(), hi: lp.max(hp) }
        }
    }
}

fn power(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Interval enclosure of a multivariate polynomial over a box (one interval
/// per ring variable).
pub fn eval_poly_box(f: &Polynomial, cube: &[RatInterval]) -> RatInterval {
    assert_eq!(cube.len(), f.ring().nvars());
    let mut acc = RatInterval::zero();
    for (m, c) in f.terms() {
        let mut t = RatInterval::point(BigRational::one());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&cube[i].pow(e));
            }
        }
        acc = acc.add(&t.scale(c));
    }
    acc
}

/// Interval enclosure of a univariate polynomial over an interval, by
/// Horner's scheme.
pub fn eval_upoly_interval(f: &UPoly, t: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(t).add(&RatInterval::point(c.clone()));
    }
    acc
}

/// Determinant enclosure of a square interval matrix by Laplace expansion.
pub fn interval_determinant(m: &[Vec<RatInterval>]) -> RatInterval {
    let n = m.len();
    if n == 0 {
        return RatInterval::point(BigRational::one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatInterval::zero();
    for (col, top) in m[0].iter().enumerate() {
        let minor: Vec<Vec<RatInterval>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sub = top.mul(&interval_determinant(&minor));
        acc = if col % 2 == 0 { acc.add(&sub) } else { acc.sub(&sub) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn even_power_of_straddling_interval() {
        let i = RatInterval::new(rat(-1, 1), rat(2, 1));
        let s = i.pow(2);
        assert_eq!(s.lo, rat(0, 1));
        assert_eq!(s.hi, rat(4, 1));
    }

    #[test]
    fn poly_box_contains_true_value() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &r).unwrap();
        let cube = vec![
            RatInterval::new(rat(3, 10), rat(4, 10)),
            RatInterval::new(rat(9, 10), rat(19, 20)),
        ];
        let v = eval_poly_box(&f, &cube);
        let exact = f.evaluate(&[rat(1, 3), rat(93, 100)]);
        assert!(v.contains(&exact));
    }

    #[test]
    fn nested_input_nests_output() {
        let r = Ring::new(vec!["x"]);
        let f = parse_polynomial("x^3 - 2*x + 1", &r).unwrap();
        let wide = vec![RatInterval::new(rat(-1, 1), rat(1, 1))];
        let narrow = vec![RatInterval::new(rat(-1, 2), rat(1, 2))];
        let vw = eval_poly_box(&f, &wide);
        let vn = eval_poly_box(&f, &narrow);
        assert!(vw.lo <= vn.lo && vn.hi <= vw.hi);
    }

    #[test]
    fn determinant_of_exact_matrix() {
        let m = vec![
            vec![RatInterval::point(rat(1, 1)), RatInterval::point(rat(2, 1))],
            vec![RatInterval::point(rat(3, 1)), RatInterval::point(rat(4, 1))],
        ];
        let d = interval_determinant(&m);
        assert!(d.is_point());
        assert_eq!(d.lo, rat(-2, 1));
    }

    #[test]
    fn division_guard() {
        let a = RatInterval::new(rat(1, 1), rat(2, 1));
        let b = RatInterval::new(rat(-1, 1), rat(1, 1));
        assert!(a.div(&b).is_none());
        let c = RatInterval::new(rat(2, 1), rat(4, 1));
        let q = a.div(&c).unwrap();
        assert_eq!(q.lo, rat(1, 4));
        assert_eq!(q.hi, rat(1, 1));
    }
}
