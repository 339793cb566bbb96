//! Monomial orders.

use crate::poly::Monomial;
use std::cmp::Ordering;

/// A total, multiplicative well-ordering on monomials of a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Block elimination order: the variables in `first_block` (ring
    /// indices) dominate; degrevlex within each block. Monomials involving
    /// a first-block variable are larger than any monomial without one, so
    /// a Groebner basis under this order yields the elimination ideal.
    Elimination { first_block: Vec<usize> },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Lex => lex(&a.0, &b.0),
            MonomialOrder::Elimination { first_block } => {
                let in_first = |i: usize| first_block.contains(&i);
                let proj = |m: &Monomial, keep: &dyn Fn(usize) -> bool| -> Vec<u32> {
                    m.0.iter()
                        .enumerate()
                        .filter(|(i, _)| keep(*i))
                        .map(|(_, &e)| e)
                        .collect()
                };
                let a1 = proj(a, &in_first);
                let b1 = proj(b, &in_first);
                degrevlex(&a1, &b1).then_with(|| {
                    let a2 = proj(a, &|i| !in_first(i));
                    let b2 = proj(b, &|i| !in_first(i));
                    degrevlex(&a2, &b2)
                })
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // rightmost differing exponent: smaller exponent wins
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > x*y > y^2 > x > y > 1 in Q[x,y]
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 1]), &m(&[0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates() {
        // eliminate variable 0: any monomial with it beats any without
        let o = MonomialOrder::Elimination { first_block: vec![0] };
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal() {
        for o in [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination { first_block: vec![1] },
        ] {
            assert_eq!(o.compare(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
        }
    }
}
