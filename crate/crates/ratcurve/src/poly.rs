//! Dense univariate polynomials over any coefficient field, lowest degree
//! first. The zero polynomial is the empty vector, so most operations need
//! no field context at all.

use crate::field::Field;
use crate::numfield::FieldElement;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Polynomial::new(vec![c])
    }

    /// x as a polynomial, given any witness element of the field.
    pub fn var(witness: &F) -> Self {
        Polynomial::new(vec![witness.zero_like(), witness.one_like()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; k];
        out.extend(self.coeffs.iter().cloned());
        Polynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            // need a witness; x^0 of the zero polynomial is taken as zero
            return match self.coeffs.first() {
                Some(c) => Polynomial::constant(c.one_like()),
                None => Polynomial::zero(),
            };
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divmod(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < den.coeffs.len() {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = den.leading().unwrap().inv().expect("unit leading coefficient");
        let zero = den.leading().unwrap().zero_like();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero; rem.len() - den.coeffs.len() + 1];
        while rem.len() >= den.coeffs.len() {
            let lead = match rem.last() {
                Some(l) if !l.is_zero() => l.mul(&lead_inv),
                _ => {
                    rem.pop();
                    continue;
                }
            };
            let shift = rem.len() - den.coeffs.len();
            quot[shift] = lead.clone();
            for (i, c) in den.coeffs.iter().enumerate() {
                rem[i + shift] = rem[i + shift].sub(&lead.mul(c));
            }
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn rem(&self, den: &Self) -> Self {
        self.divmod(den).1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut acc = c.zero_like();
            for _ in 0..i {
                acc = acc.add(c);
            }
            out.push(acc);
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// self(g) for a polynomial argument.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Square-free part self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }

    /// Map coefficients into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<FieldElement> {
    pub fn conjugate(&self) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c.conjugate()).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_fixed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(v: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(v.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn divmod_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let b = p(&[1, 2]);
        let (quot, rem) = a.divmod(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_common_factor() {
        let f = p(&[-1, 0, 1]); // x^2-1
        let g = p(&[-1, 1]); // x-1
        assert_eq!(f.gcd(&g), g.monic());
        let coprime = p(&[1, 1]).gcd(&p(&[2, 0, 1]));
        assert!(coprime.is_constant());
    }

    #[test]
    fn derivative_and_eval() {
        let f = p(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        assert_eq!(f.derivative(), p(&[-3, 0, 6]));
        assert_eq!(f.eval(&q(2)), q(11));
    }

    #[test]
    fn squarefree() {
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1])); // (x-1)^2 (x+1)
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[1, 1])).monic());
    }

    #[test]
    fn compose_monomials() {
        let f = p(&[0, 0, 1]); // x^2
        let g = p(&[0, 0, 0, 1]); // x^3
        assert_eq!(f.compose(&g), p(&[0, 0, 0, 0, 0, 0, 1]));
    }
}
