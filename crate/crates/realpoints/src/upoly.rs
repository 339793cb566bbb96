//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored low degree first. Used for Sturm sequences,
//! rational parameterizations and certified root work; everything is exact.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    /// The monic linear polynomial `x - r`.
    pub fn x_minus(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UPoly::new(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    /// Exact euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d = divisor.coeffs.len();
        if self.coeffs.len() < d {
            return (UPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len() - d + 1];
        let lead_inv = divisor.leading_coeff().recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let sub = &c * b;
                rem[k + j] = &rem[k + j] - sub;
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Monic gcd via the euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree() <= 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        assert!(!self.is_zero());
        let lead = self.leading_coeff();
        let mut max = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = (c / &lead).abs();
            if a > max {
                max = a;
            }
        }
        max + BigRational::one()
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{}", c),
                1 => format!("{}*T", c),
                _ => format!("{}*T^{}", c, i),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_exact() {
        let f = UPoly::from_ints(&[-2, 0, 1]); // x^2 - 2
        let g = UPoly::from_ints(&[1, 1]); // x + 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert_eq!(r, UPoly::from_ints(&[-1]));
        assert_eq!(q.mul(&g).add(&r), f);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = UPoly::from_ints(&[-1, 1]); // x - 1
        let b = UPoly::from_ints(&[1, 1]); // x + 1
        let f = a.mul(&b);
        let g = a.mul(&a);
        assert_eq!(f.gcd(&g), a.monic());
    }

    #[test]
    fn squarefree_collapses_multiplicity() {
        let a = UPoly::from_ints(&[-1, 1]);
        let cube = a.mul(&a).mul(&a);
        assert_eq!(cube.squarefree_part(), a);
    }

    #[test]
    fn root_bound_contains_roots() {
        let f = UPoly::from_ints(&[-2, 0, 1]);
        let b = f.root_bound();
        assert!(b > BigRational::from_integer(1.into()));
    }
}
