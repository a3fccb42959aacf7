//! Sturm sequences over ℚ: exact counts of distinct real roots in an
//! interval, plus bisection-based root isolation. Everything here insists
//! on rational coefficients — callers working in a larger field must first
//! project onto the σ-fixed subfield.

use num::BigRational;
use num::{Signed, Zero};
use thiserror::Error;

use crate::interval::Rat;
use crate::numfield::FieldElement;
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum SturmError {
    #[error("polynomial has a coefficient outside the rationals")]
    NotRationalCoefficients,
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

pub type QPolynomial = Polynomial<BigRational>;

/// Project a polynomial over a number field onto ℚ; error when any
/// coefficient is irrational.
pub fn rational_poly(p: &Polynomial<FieldElement>) -> Result<QPolynomial, SturmError> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        out.push(c.as_rational().ok_or(SturmError::NotRationalCoefficients)?);
    }
    Ok(Polynomial::new(out))
}

fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of the square-free part.
pub struct SturmChain {
    chain: Vec<QPolynomial>,
}

impl SturmChain {
    pub fn new(p: &QPolynomial) -> Result<Self, SturmError> {
        if p.is_zero() {
            return Err(SturmError::ZeroPolynomial);
        }
        let sf = p.squarefree_part();
        let mut chain = vec![sf.clone(), sf.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        Ok(SturmChain { chain })
    }

    fn sign_changes_at(&self, b: &Bound) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| match b {
                Bound::Finite(x) => sign(&p.eval(x)),
                Bound::PosInf => p.leading().map(|l| sign(l)).unwrap_or(0),
                Bound::NegInf => p
                    .leading()
                    .map(|l| {
                        let s = sign(l);
                        if p.degree().unwrap() % 2 == 1 {
                            -s
                        } else {
                            s
                        }
                    })
                    .unwrap_or(0),
            })
            .collect();
        let mut changes = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct real roots in (lo, hi]; an infinite endpoint is open.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let a = self.sign_changes_at(lo);
        let b = self.sign_changes_at(hi);
        a.saturating_sub(b)
    }
}

/// Distinct real roots of p in the interval (lo, hi]. Also counts a root
/// sitting exactly at a finite `hi` endpoint, not at `lo`.
pub fn sturm_count(p: &QPolynomial, lo: &Bound, hi: &Bound) -> Result<usize, SturmError> {
    let chain = SturmChain::new(p)?;
    Ok(chain.count(lo, hi))
}

pub fn count_real_roots(p: &QPolynomial) -> Result<usize, SturmError> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// Cauchy bound: all real roots lie in (-B, B).
pub fn root_bound(p: &QPolynomial) -> Rat {
    let lead = p.leading().expect("nonzero polynomial");
    let mut max = Rat::zero();
    for c in p.coeffs() {
        let v = (c / lead).abs();
        if v > max {
            max = v;
        }
    }
    max + BigRational::from_integer(1.into())
}

/// An isolated real root: either exactly rational or trapped in an open
/// interval with non-root endpoints containing exactly one root.
#[derive(Debug, Clone, PartialEq)]
pub enum IsolatedRoot {
    Rational(Rat),
    Interval(Rat, Rat),
}

impl IsolatedRoot {
    pub fn approx(&self) -> Rat {
        match self {
            IsolatedRoot::Rational(r) => r.clone(),
            IsolatedRoot::Interval(a, b) => (a + b) / BigRational::from_integer(2.into()),
        }
    }
}

/// Isolate all distinct real roots by Sturm bisection.
pub fn isolate_real_roots(p: &QPolynomial) -> Result<Vec<IsolatedRoot>, SturmError> {
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf)?;
    let total = chain.count(&Bound::NegInf, &Bound::PosInf);
    if total == 0 {
        return Ok(vec![]);
    }
    let bound = root_bound(&sf);
    let mut work = vec![(-bound.clone(), bound)];
    let mut found: Vec<IsolatedRoot> = Vec::new();
    while let Some((lo, hi)) = work.pop() {
        // ensure endpoints are non-roots (outer bound is safely non-root;
        // bisection midpoints are checked before reuse)
        let n = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        match n {
            0 => {}
            1 => {
                let eps = BigRational::new(1.into(), 1024.into());
                found.push(refine_root(&sf, &IsolatedRoot::Interval(lo, hi), &eps));
            }
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                if sf.eval(&mid).is_zero() {
                    found.push(IsolatedRoot::Rational(mid.clone()));
                    // nudge the split points off the root
                    let quarter = (&hi - &lo) / BigRational::from_integer(1024.into());
                    let m_lo = &mid - &quarter;
                    let m_hi = &mid + &quarter;
                    let m_lo = skew_off_root(&sf, m_lo, &lo);
                    let m_hi = skew_off_root(&sf, m_hi, &hi);
                    work.push((lo, m_lo));
                    work.push((m_hi, hi));
                } else {
                    work.push((lo, mid.clone()));
                    work.push((mid, hi));
                }
            }
        }
    }
    found.sort_by(|a, b| a.approx().cmp(&b.approx()));
    Ok(found)
}

fn skew_off_root(p: &QPolynomial, mut x: Rat, toward: &Rat) -> Rat {
    let two = BigRational::from_integer(2.into());
    while p.eval(&x).is_zero() {
        x = (&x + toward) / &two;
    }
    x
}

/// Refine an isolating interval until its width is below eps.
pub fn refine_root(p: &QPolynomial, root: &IsolatedRoot, eps: &Rat) -> IsolatedRoot {
    match root {
        IsolatedRoot::Rational(_) => root.clone(),
        IsolatedRoot::Interval(lo, hi) => {
            let sf = p.squarefree_part();
            let mut lo = lo.clone();
            let mut hi = hi.clone();
            let sign_lo = sign(&sf.eval(&lo));
            let two = BigRational::from_integer(2.into());
            while &hi - &lo > *eps {
                let mid = (&lo + &hi) / &two;
                let sm = sign(&sf.eval(&mid));
                if sm == 0 {
                    return IsolatedRoot::Rational(mid);
                }
                if sm == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            IsolatedRoot::Interval(lo, hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        BigRational::from_integer(n.into())
    }

    fn p(v: &[i64]) -> QPolynomial {
        Polynomial::new(v.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn no_real_roots_definite_quadratic() {
        // X^2 + 156X + 33867 = (X+78)^2 + 27783
        let f = p(&[33867, 156, 1]);
        assert_eq!(count_real_roots(&f).unwrap(), 0);
    }

    #[test]
    fn two_roots_of_quadratic() {
        assert_eq!(count_real_roots(&p(&[-1, 0, 1])).unwrap(), 2);
    }

    #[test]
    fn cube_root_in_interval() {
        let f = p(&[0, 0, 0, 1]); // z^3
        assert_eq!(
            sturm_count(&f, &Bound::Finite(q(-1)), &Bound::Finite(q(1))).unwrap(),
            1
        );
    }

    #[test]
    fn isolate_three_roots() {
        // (x-1)(x+2)(x-5)
        let f = p(&[-1, 1]).mul(&p(&[2, 1])).mul(&p(&[-5, 1]));
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 3);
        let approxes: Vec<f64> = roots
            .iter()
            .map(|r| crate::interval::rat_to_f64(&r.approx()))
            .collect();
        assert!((approxes[0] + 2.0).abs() < 1.0);
        assert!((approxes[1] - 1.0).abs() < 1.0);
        assert!((approxes[2] - 5.0).abs() < 1.0);
        for (r, expect) in roots.iter().zip([-2.0, 1.0, 5.0]) {
            let refined = refine_root(&f, r, &BigRational::new(1.into(), 1000.into()));
            let v = crate::interval::rat_to_f64(&refined.approx());
            assert!((v - expect).abs() < 0.01);
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)^2 (x+1)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(count_real_roots(&f).unwrap(), 2);
    }

    #[test]
    fn exact_rational_root_found() {
        let f = p(&[0, 1]); // x
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots, vec![IsolatedRoot::Rational(q(0))]);
    }
}
