//! Möbius transforms (az+b)/(cz+d) over a number field, with the
//! three-point interpolation used to normalize maps on the projective line.

use thiserror::Error;

use crate::field::{Field, Ring};
use crate::numfield::{FieldElement, NumberField};
use crate::poly::Polynomial;
use crate::ratfn::{ExtValue, RatFn};

pub type ExtPoint = ExtValue<FieldElement>;

#[derive(Debug, Error)]
pub enum MoebiusError {
    #[error("points must be pairwise distinct")]
    DegenerateTriple,
    #[error("determinant ad - bc is zero")]
    SingularMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MoebiusTransform {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl MoebiusTransform {
    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<Self, MoebiusError> {
        let det = a.mul(&d).sub(&b.mul(&c));
        if Ring::is_zero(&det) {
            return Err(MoebiusError::SingularMatrix);
        }
        Ok(MoebiusTransform { a, b, c, d })
    }

    pub fn identity(field: &NumberField) -> Self {
        MoebiusTransform {
            a: field.one(),
            b: field.zero(),
            c: field.zero(),
            d: field.one(),
        }
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn det(&self) -> FieldElement {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn to_ratfn(&self) -> RatFn<FieldElement> {
        RatFn::new(
            Polynomial::new(vec![self.b.clone(), self.a.clone()]),
            Polynomial::new(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("nonzero denominator")
    }

    pub fn apply(&self, p: &ExtPoint) -> ExtPoint {
        match p {
            ExtValue::Finite(z) => {
                let num = self.a.mul(z).add(&self.b);
                let den = self.c.mul(z).add(&self.d);
                match den.inv() {
                    Some(i) => ExtValue::Finite(num.mul(&i)),
                    None => ExtValue::Infinity,
                }
            }
            ExtValue::Infinity => match self.c.inv() {
                Some(i) => ExtValue::Finite(self.a.mul(&i)),
                None => ExtValue::Infinity,
            },
        }
    }

    /// Matrix product: (self ∘ other) as maps.
    pub fn compose(&self, other: &Self) -> Self {
        MoebiusTransform {
            a: self.a.mul(&other.a).add(&self.b.mul(&other.c)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.d)),
            c: self.c.mul(&other.a).add(&self.d.mul(&other.c)),
            d: self.c.mul(&other.b).add(&self.d.mul(&other.d)),
        }
    }

    pub fn inverse(&self) -> Self {
        MoebiusTransform {
            a: self.d.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.a.clone(),
        }
    }

    pub fn conjugate(&self) -> Self {
        MoebiusTransform {
            a: self.a.conjugate(),
            b: self.b.conjugate(),
            c: self.c.conjugate(),
            d: self.d.conjugate(),
        }
    }

    pub fn is_real(&self) -> bool {
        // σ-fixed up to a common scalar: compare the associated functions
        self.to_ratfn().is_real() || {
            let f = self.to_ratfn();
            f.conjugate() == f
        }
    }

    /// The unique Möbius map with src_i ↦ dst_i, via cross-ratios.
    pub fn from_triples(
        src: [&ExtPoint; 3],
        dst: [&ExtPoint; 3],
    ) -> Result<Self, MoebiusError> {
        let m1 = Self::to_standard(src)?;
        let m2 = Self::to_standard(dst)?;
        Ok(m2.inverse().compose(&m1))
    }

    /// Map sending (p1, p2, p3) to (0, 1, ∞):
    /// z ↦ ((z-p1)(p2-p3)) / ((z-p3)(p2-p1)).
    fn to_standard(p: [&ExtPoint; 3]) -> Result<Self, MoebiusError> {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if p[i] == p[j] {
                    return Err(MoebiusError::DegenerateTriple);
                }
            }
        }
        let field = p
            .iter()
            .find_map(|q| match q {
                ExtValue::Finite(v) => Some(v.field().clone()),
                ExtValue::Infinity => None,
            })
            .expect("at most one point is infinite");
        let one = field.one();
        let zero = field.zero();
        // handle infinite entries by degenerating the corresponding factors
        match (p[0], p[1], p[2]) {
            (ExtValue::Infinity, ExtValue::Finite(p2), ExtValue::Finite(p3)) => {
                // z ↦ (p2-p3)/(z-p3)
                MoebiusTransform::new(zero, p2.sub(p3), one, p3.neg())
            }
            (ExtValue::Finite(p1), ExtValue::Infinity, ExtValue::Finite(p3)) => {
                // z ↦ (z-p1)/(z-p3)
                MoebiusTransform::new(one.clone(), p1.neg(), one, p3.neg())
            }
            (ExtValue::Finite(p1), ExtValue::Finite(p2), ExtValue::Infinity) => {
                // z ↦ (z-p1)/(p2-p1)
                MoebiusTransform::new(one, p1.neg(), zero, p2.sub(p1))
            }
            (ExtValue::Finite(p1), ExtValue::Finite(p2), ExtValue::Finite(p3)) => {
                let a = p2.sub(p3);
                let b = p1.neg().mul(&a);
                let c = p2.sub(p1);
                let d = p3.neg().mul(&c);
                MoebiusTransform::new(a, b, c, d)
            }
            _ => unreachable!("duplicates already rejected"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> NumberField {
        NumberField::gaussian().unwrap()
    }

    fn fin(k: &NumberField, n: i64) -> ExtPoint {
        ExtValue::Finite(k.from_integer(n))
    }

    #[test]
    fn identity_from_triples() {
        let k = field();
        let (z0, z1, inf) = (fin(&k, 0), fin(&k, 1), ExtPoint::Infinity);
        let m =
            MoebiusTransform::from_triples([&z0, &z1, &inf], [&z0, &z1, &inf]).unwrap();
        assert_eq!(m.to_ratfn(), RatFn::var(&k.one()));
    }

    #[test]
    fn reciprocal_from_triples() {
        let k = field();
        let (z0, z1, inf) = (fin(&k, 0), fin(&k, 1), ExtPoint::Infinity);
        let m =
            MoebiusTransform::from_triples([&z0, &z1, &inf], [&inf, &z1, &z0]).unwrap();
        assert_eq!(m.apply(&z0), ExtPoint::Infinity);
        assert_eq!(m.apply(&z1), z1);
        assert_eq!(m.apply(&inf), z0);
        // it is 1/z
        let f = m.to_ratfn();
        assert_eq!(f, RatFn::var(&k.one()).recip().unwrap());
    }

    #[test]
    fn cayley_type_map() {
        let k = field();
        let i = k.generator();
        let pi = ExtValue::Finite(i.clone());
        let mi = ExtValue::Finite(i.neg());
        let inf = ExtPoint::Infinity;
        let z0 = fin(&k, 0);
        let z1 = fin(&k, 1);
        // (i,-i,∞) → (∞,0,1) is μ(z) = (z+i)/(z-i)
        let m = MoebiusTransform::from_triples([&pi, &mi, &inf], [&inf, &z0, &z1]).unwrap();
        assert_eq!(m.apply(&pi), inf);
        assert_eq!(m.apply(&mi), z0);
        assert_eq!(m.apply(&inf), z1);
        let f = m.to_ratfn();
        let expect = RatFn::parse("(z+t)/(z-t)", &k, 'z').unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let k = field();
        let m = MoebiusTransform::new(
            k.from_integer(2),
            k.generator(),
            k.one(),
            k.from_integer(3),
        )
        .unwrap();
        let comp = m.compose(&m.inverse());
        // scalar multiple of the identity matrix
        let f = comp.to_ratfn();
        assert_eq!(f, RatFn::var(&k.one()));
    }

    #[test]
    fn moebius_composition_matches_ratfn() {
        let k = field();
        let m1 = MoebiusTransform::new(
            k.from_integer(1),
            k.from_integer(2),
            k.from_integer(0),
            k.from_integer(1),
        )
        .unwrap();
        let m2 = MoebiusTransform::new(
            k.from_integer(0),
            k.from_integer(1),
            k.from_integer(1),
            k.from_integer(0),
        )
        .unwrap();
        let lhs = m1.compose(&m2).to_ratfn();
        let rhs = m1.to_ratfn().compose(&m2.to_ratfn());
        assert_eq!(lhs, rhs);
    }
}
