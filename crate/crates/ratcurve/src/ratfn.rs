//! Reduced rational functions over a coefficient field: numerator and
//! denominator coprime, denominator monic. The canonical form makes
//! equality of the textbook-style identities decidable by normalization.

use num::Signed;

use crate::field::{Field, Ring};
use crate::numfield::{FieldElement, NumberField};
use crate::parse::{ExprParser, ParseError};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
pub struct RatFn<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

/// A value on the projective line over F.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtValue<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> RatFn<F> {
    /// Reduce to coprime numerator/denominator with monic denominator.
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFn { num: Polynomial::zero(), den: den.monic().pow(0) });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.divmod(&g).0, den.divmod(&g).0)
        };
        let lead_inv = den.leading().unwrap().inv()?;
        Some(RatFn { num: num.scale(&lead_inv), den: den.monic() })
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        let one = p
            .coeffs()
            .first()
            .expect("use RatFn::constant for the zero function")
            .one_like();
        RatFn { num: p, den: Polynomial::constant(one) }
    }

    pub fn constant(c: F) -> Self {
        let one = Polynomial::constant(c.one_like());
        RatFn { num: Polynomial::constant(c), den: one }
    }

    pub fn var(witness: &F) -> Self {
        RatFn::from_poly(Polynomial::var(witness))
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg num, deg den); None for the zero function’s “degree”.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    fn witness(&self) -> Option<&F> {
        self.den.leading().or_else(|| self.num.leading())
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        RatFn::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFn::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.num.is_zero() {
            return None;
        }
        RatFn::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let w = self.witness().expect("nonzero function");
            return RatFn::constant(w.one_like());
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Self) -> Self {
        let m = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let one = Polynomial::constant(
            inner.den.leading().expect("nonzero denominator").one_like(),
        );
        // precompute powers so the zero numerator needs no witness
        let mut n_pow = vec![one.clone()];
        let mut d_pow = vec![one];
        for i in 1..=m {
            n_pow.push(n_pow[i - 1].mul(&inner.num));
            d_pow.push(d_pow[i - 1].mul(&inner.den));
        }
        let eval_hom = |p: &Polynomial<F>| -> Polynomial<F> {
            // Σ p_i n^i d^(m-i)
            let mut acc = Polynomial::zero();
            for i in 0..=m {
                let ci = match p.coeff(i) {
                    Some(c) if !c.is_zero() => c.clone(),
                    _ => continue,
                };
                acc = acc.add(&n_pow[i].mul(&d_pow[m - i]).scale(&ci));
            }
            acc
        };
        let num = eval_hom(&self.num);
        let den = eval_hom(&self.den);
        RatFn::new(num, den).expect("composition denominator vanished identically")
    }

    /// Evaluate at a point of the projective line.
    pub fn eval_ext(&self, x: &ExtValue<F>) -> ExtValue<F> {
        match x {
            ExtValue::Finite(v) => {
                let n = self.num.eval(v);
                let d = self.den.eval(v);
                if d.is_zero() {
                    // reduced form: num and den share no root
                    ExtValue::Infinity
                } else {
                    ExtValue::Finite(n.mul(&d.inv().unwrap()))
                }
            }
            ExtValue::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree();
                match (dn, dd) {
                    (None, _) => ExtValue::Finite(self.den.leading().unwrap().zero_like()),
                    (Some(a), Some(b)) if a > b => ExtValue::Infinity,
                    (Some(a), Some(b)) if a < b => {
                        ExtValue::Finite(self.num.leading().unwrap().zero_like())
                    }
                    (Some(_), Some(_)) => ExtValue::Finite(
                        self.num
                            .leading()
                            .unwrap()
                            .mul(&self.den.leading().unwrap().inv().unwrap()),
                    ),
                    (Some(_), None) => unreachable!("zero denominator"),
                }
            }
        }
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        match self.eval_ext(&ExtValue::Finite(x.clone())) {
            ExtValue::Finite(v) => Some(v),
            ExtValue::Infinity => None,
        }
    }

    /// Formal derivative by the quotient rule (not reduced against squares).
    pub fn derivative(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        RatFn::new(num, den).expect("nonzero denominator")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RatFn<G> {
        RatFn {
            num: self.num.map(f),
            den: self.den.map(f),
        }
    }
}

impl<F: Field> Ring for RatFn<F> {
    fn zero_like(&self) -> Self {
        let w = self.witness().expect("witness coefficient");
        RatFn {
            num: Polynomial::zero(),
            den: Polynomial::constant(w.one_like()),
        }
    }
    fn one_like(&self) -> Self {
        let w = self.witness().expect("witness coefficient");
        RatFn::constant(w.one_like())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFn::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFn::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFn::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFn::neg(self)
    }
}

impl<F: Field> Field for RatFn<F> {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

impl RatFn<FieldElement> {
    pub fn conjugate(&self) -> Self {
        // conjugation can denormalize the monic denominator; renormalize
        RatFn::new(self.num.conjugate(), self.den.conjugate()).expect("nonzero denominator")
    }

    /// True iff every coefficient of the canonical form is σ-fixed.
    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn parse(input: &str, field: &NumberField, var: char) -> Result<Self, ParseError> {
        ExprParser::new(input, field, Some(var))?.parse()
    }

    /// Canonical deterministic string, e.g. `(2*z^3+(t+1)*z)/(z^2-t)`.
    pub fn to_string_var(&self, var: char) -> String {
        let num = poly_to_string(&self.num, var);
        if self.den.is_constant() && self.den.leading().map(|c| c == &c.one_like()).unwrap_or(false)
        {
            return num;
        }
        let den = poly_to_string(&self.den, var);
        format!("({num})/({den})")
    }
}

pub fn poly_to_string(p: &Polynomial<FieldElement>, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for i in (0..p.coeffs().len()).rev() {
        let c = match p.coeff(i) {
            Some(c) if !c.is_zero() => c,
            _ => continue,
        };
        let monomial = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let (sign, body) = format_coeff(c, &monomial);
        if out.is_empty() {
            if sign < 0 {
                out.push('-');
            }
        } else if sign < 0 {
            out.push('-');
        } else {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

/// Split a coefficient into sign and printable body relative to a monomial.
fn format_coeff(c: &FieldElement, monomial: &str) -> (i8, String) {
    let nonzero: Vec<usize> = c
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, q)| !num::Zero::is_zero(*q))
        .map(|(i, _)| i)
        .collect();
    if nonzero.len() == 1 {
        let i = nonzero[0];
        let q = &c.coords()[i];
        let sign = if q.is_negative() { -1 } else { 1 };
        let aq = q.abs();
        let tpart = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let mut parts: Vec<String> = Vec::new();
        if !num::One::is_one(&aq) || (tpart.is_empty() && monomial.is_empty()) {
            parts.push(format!("{aq}"));
        }
        if !tpart.is_empty() {
            parts.push(tpart);
        }
        if !monomial.is_empty() {
            parts.push(monomial.to_string());
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        (sign, parts.join("*"))
    } else {
        // multi-term coefficient: parenthesized, positive sign outside
        let body = if monomial.is_empty() {
            format!("({c})")
        } else {
            format!("({c})*{monomial}")
        };
        (1, body)
    }
}

impl std::fmt::Display for RatFn<FieldElement> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_string_var('z'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;

    fn eisenstein() -> NumberField {
        NumberField::eisenstein().unwrap()
    }

    fn parse(k: &NumberField, s: &str) -> RatFn<FieldElement> {
        RatFn::parse(s, k, 'z').unwrap()
    }

    #[test]
    fn reduce_common_factor() {
        let k = eisenstein();
        let f = parse(&k, "(z^2-1)/(z-1)");
        assert_eq!(f, parse(&k, "z+1"));
    }

    #[test]
    fn printed_g_is_already_reduced() {
        let k = eisenstein();
        let g = parse(&k, "(2*z^3+(t+1)*z)/(z^2-t)");
        assert_eq!(g.degree(), 3);
        assert_eq!(g.num().degree(), Some(3));
        assert_eq!(g.den().degree(), Some(2));
        // round-trip through the canonical printer
        assert_eq!(g.to_string_var('z'), "(2*z^3+(t+1)*z)/(z^2-t)");
        assert_eq!(parse(&k, &g.to_string_var('z')), g);
    }

    #[test]
    fn compose_identity_cases() {
        let k = eisenstein();
        let g = parse(&k, "(2*z^3+(t+1)*z)/(z^2-t)");
        let id = parse(&k, "z");
        assert_eq!(id.compose(&g), g);
        assert_eq!(g.compose(&id), g);
        let z2 = parse(&k, "z^2");
        let z3 = parse(&k, "z^3");
        assert_eq!(z2.compose(&z3), parse(&k, "z^6"));
    }

    #[test]
    fn printed_composition_matches() {
        let k = eisenstein();
        let f = parse(&k, "(z^3-6*(t+1)*z)/(3*z^2+1)");
        let g = parse(&k, "(2*z^3+(t+1)*z)/(z^2-t)");
        let h = f.compose(&g);
        let expect = parse(&k, "(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)");
        assert_eq!(h, expect);
        assert!(h.is_real());
        assert!(!g.is_real());
        assert_eq!(h.degree(), 9);
    }

    #[test]
    fn conjugate_involution_and_hom() {
        let k = eisenstein();
        let f = parse(&k, "(z^3-6*(t+1)*z)/(3*z^2+1)");
        let g = parse(&k, "(2*z^3+(t+1)*z)/(z^2-t)");
        assert_eq!(g.conjugate().conjugate(), g);
        assert_eq!(
            f.compose(&g).conjugate(),
            f.conjugate().compose(&g.conjugate())
        );
        // ḡ printed form
        assert_eq!(g.conjugate().to_string_var('z'), "(2*z^3-t*z)/(z^2+(t+1))");
    }

    #[test]
    fn eval_at_infinity() {
        let k = eisenstein();
        let g = parse(&k, "(2*z^3+1)/(z^2-1)");
        assert_eq!(g.eval_ext(&ExtValue::Infinity), ExtValue::Infinity);
        let m = parse(&k, "(3*z+1)/(z-2)");
        assert_eq!(
            m.eval_ext(&ExtValue::Infinity),
            ExtValue::Finite(k.from_integer(3))
        );
        let small = parse(&k, "z/(z^2+1)");
        assert_eq!(
            small.eval_ext(&ExtValue::Infinity),
            ExtValue::Finite(k.zero())
        );
    }

    #[test]
    fn degree_multiplicativity_printed_instance() {
        let k = eisenstein();
        let f = parse(&k, "(z^3-6*(t+1)*z)/(3*z^2+1)");
        let g = parse(&k, "(2*z^3+(t+1)*z)/(z^2-t)");
        assert_eq!(f.compose(&g).degree(), f.degree() * g.degree());
    }
}
