//! Real root isolation by Sturm sequences and bisection.

use crate::interval::RatInterval;
use crate::upoly::UPoly;
use num_rational::BigRational;
use num_traits::Zero;

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    seq: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(f: &UPoly) -> Self {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[k - 2].rem(&seq[k - 1]).neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        SturmChain { seq }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

// A split point in (a, b) where f does not vanish. The midpoint works
// almost always; a squarefree f of degree delta has at most delta roots,
// so one of delta + 2 equispaced interior points must be free.
fn non_root_split(f: &UPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let mid = (a + b) / BigRational::from_integer(2.into());
    if !f.eval(&mid).is_zero() {
        return mid;
    }
    let delta = f.degree().max(1);
    let span = b - a;
    for k in 1..=(delta + 2) {
        let m = a + &span * BigRational::new(k.into(), (delta + 3).into());
        if !f.eval(&m).is_zero() {
            return m;
        }
    }
    unreachable!("more roots than the degree allows");
}

fn isolate_rec(
    chain: &SturmChain,
    f: &UPoly,
    a: BigRational,
    b: BigRational,
    count: usize,
    width: &BigRational,
    out: &mut Vec<RatInterval>,
) {
    match count {
        0 => {}
        1 => {
            let mut lo = a;
            let mut hi = b;
            while &(&hi - &lo) >= width {
                let m = non_root_split(f, &lo, &hi);
                if chain.count_in(&lo, &m) == 1 {
                    hi = m;
                } else {
                    lo = m;
                }
            }
            out.push(RatInterval::new(lo, hi));
        }
        _ => {
            let m = non_root_split(f, &a, &b);
            let left = chain.count_in(&a, &m);
            isolate_rec(chain, f, a, m.clone(), left, width, out);
            isolate_rec(chain, f, m, b, count - left, width, out);
        }
    }
}

/// Disjoint isolating intervals, one per distinct real root of `f`, each
/// narrower than `width`. Endpoints never hit a root (except for the exact
/// point interval a degree-one factor produces), so downstream refinement
/// can bisect on sign changes of the squarefree part.
pub fn isolate_real_roots(f: &UPoly, width: &BigRational) -> Vec<RatInterval> {
    assert!(!f.is_zero(), "cannot isolate roots of the zero polynomial");
    let sf = f.squarefree_part();
    if sf.degree() <= 0 {
        return Vec::new();
    }
    if sf.degree() == 1 {
        let root = -&sf.coeffs()[0] / &sf.coeffs()[1];
        return vec![RatInterval::point(root)];
    }
    let chain = SturmChain::new(&sf);
    let bound = sf.root_bound();
    let total = chain.count_in(&-bound.clone(), &bound);
    let mut out = Vec::new();
    isolate_rec(&chain, &sf, -bound.clone(), bound, total, width, &mut out);
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Halves an isolating interval of the squarefree `f`, keeping the root.
pub fn refine_root_interval(f: &UPoly, iv: &RatInterval) -> RatInterval {
    if iv.is_point() {
        return iv.clone();
    }
    let m = iv.midpoint();
    let sm = f.sign_at(&m);
    if sm == 0 {
        return RatInterval::point(m);
    }
    let sa = f.sign_at(&iv.lo);
    if sa != 0 && sa != sm {
        RatInterval::new(iv.lo.clone(), m)
    } else {
        RatInterval::new(m, iv.hi.clone())
    }
}
