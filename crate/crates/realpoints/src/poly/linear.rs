//! Invertible linear changes of variables.

use super::Polynomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearChangeError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: matrix is {matrix} x {matrix}, got {vars} variables")]
    DimensionMismatch { matrix: usize, vars: usize },
}

/// A square invertible rational matrix acting on a chosen variable vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<BigRational>>,
    dimension: usize,
}

impl LinearChange {
    /// Builds the change of variables, rejecting singular matrices.
    pub fn new(matrix: Vec<Vec<BigRational>>) -> Result<Self, LinearChangeError> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(LinearChangeError::NotSquare);
        }
        let lc = LinearChange { matrix, dimension: n };
        if lc.determinant().is_zero() {
            return Err(LinearChangeError::Singular);
        }
        Ok(lc)
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        LinearChange { matrix, dimension: n }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, LinearChangeError> {
        let matrix = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self::new(matrix)
    }

    /// Uniform integer entries in `[-bound, bound]`, redrawn until the
    /// matrix is invertible.
    pub fn random_integer<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Self {
        loop {
            let matrix: Vec<Vec<BigRational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigRational::from_integer(rng.gen_range(-bound..=bound).into()))
                        .collect()
                })
                .collect();
            if let Ok(lc) = Self::new(matrix) {
                return lc;
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    #[allow(clippy::needless_range_loop)]
    pub fn determinant(&self) -> BigRational {
        let n = self.dimension;
        let mut m = self.matrix.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                return BigRational::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det *= &m[col][col];
            let inv = m[col][col].recip();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let sub = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        det
    }

    /// Exact inverse via Gauss-Jordan.
    pub fn inverse(&self) -> LinearChange {
        let n = self.dimension;
        let mut a = self.matrix.clone();
        let mut b = LinearChange::identity(n).matrix;
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible by invariant");
            a.swap(p, col);
            b.swap(p, col);
            let inv = a[col][col].recip();
            for c in 0..n {
                a[col][c] = &a[col][c] * &inv;
                b[col][c] = &b[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let ta = &f * &a[col][c];
                    let tb = &f * &b[col][c];
                    a[r][c] = &a[r][c] - ta;
                    b[r][c] = &b[r][c] - tb;
                }
            }
        }
        LinearChange { matrix: b, dimension: n }
    }

    /// Image of a rational vector.
    pub fn apply_vector(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.dimension);
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// Substitutes the variable vector `vars` by `A * vars` inside `f`,
/// expanding exactly. Variables outside `vars` are untouched.
pub fn apply_linear_change(
    f: &Polynomial,
    a: &LinearChange,
    vars: &[&str],
) -> Result<Polynomial, LinearChangeError> {
    let ring = f.ring().clone();
    if vars.len() != a.dimension() {
        return Err(LinearChangeError::DimensionMismatch {
            matrix: a.dimension(),
            vars: vars.len(),
        });
    }
    let idx: Vec<usize> = vars
        .iter()
        .map(|v| ring.var_index(v).expect("variable not in ring"))
        .collect();
    // images of every ring variable under the substitution
    let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(&ring, i)).collect();
    for (row, &vi) in idx.iter().enumerate() {
        let mut img = Polynomial::zero(&ring);
        for (col, &vj) in idx.iter().enumerate() {
            let c = &a.matrix()[row][col];
            if !c.is_zero() {
                img = img.add(&Polynomial::var(&ring, vj).scale(c));
            }
        }
        images[vi] = img;
    }
    Ok(f.compose(&ring, &images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::poly::parse_polynomial;

    #[test]
    fn identity_is_noop() {
        let r = Ring::new(vec!["X1", "X2"]);
        let f = parse_polynomial("X1", &r).unwrap();
        let a = LinearChange::identity(2);
        assert_eq!(apply_linear_change(&f, &a, &["X1", "X2"]).unwrap(), f);
    }

    #[test]
    fn permutation_swaps_variables() {
        let r = Ring::new(vec!["X1", "X2"]);
        let f = parse_polynomial("X1", &r).unwrap();
        let a = LinearChange::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let g = apply_linear_change(&f, &a, &["X1", "X2"]).unwrap();
        assert_eq!(g, parse_polynomial("X2", &r).unwrap());
    }

    #[test]
    fn shear_expands_square() {
        let r = Ring::new(vec!["X1", "X2"]);
        let f = parse_polynomial("X1^2", &r).unwrap();
        let a = LinearChange::from_int_rows(&[&[1, 1], &[0, 1]]).unwrap();
        let g = apply_linear_change(&f, &a, &["X1", "X2"]).unwrap();
        assert_eq!(g, parse_polynomial("X1^2 + 2*X1*X2 + X2^2", &r).unwrap());
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(
            LinearChange::from_int_rows(&[&[1, 2], &[2, 4]]),
            Err(LinearChangeError::Singular)
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let r = Ring::new(vec!["X1", "X2"]);
        let f = parse_polynomial("X1^2 - 3*X2 + 1", &r).unwrap();
        let a = LinearChange::from_int_rows(&[&[2, 1], &[1, 1]]).unwrap();
        let g = apply_linear_change(&f, &a, &["X1", "X2"]).unwrap();
        let back = apply_linear_change(&g, &a.inverse(), &["X1", "X2"]).unwrap();
        assert_eq!(back, f);
    }
}
