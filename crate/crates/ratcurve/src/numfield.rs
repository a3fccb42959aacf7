//! Number fields K = ℚ[t]/(m(t)) carrying an order-2 conjugation
//! automorphism σ (given by its image σ(t)) and a complex embedding chosen
//! by an isolating interval box around one root of m.

use std::sync::{Arc, RwLock};

use num::bigint::BigInt;
use num::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

use crate::field::{Field, Ring};
use crate::interval::{rat_from_f64, ComplexBox, Interval, Rat};
use crate::parse;

#[derive(Debug, Error)]
pub enum NfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("modulus must be monic of degree >= 1")]
    BadModulus,
    #[error("modulus is reducible over the rationals: {0}")]
    NotIrreducible(String),
    #[error("conjugation image does not define an order-2 automorphism")]
    BadConjugation,
    #[error("embedding refinement failed to reach the requested precision")]
    PrecisionExhausted,
    #[error("unknown built-in field '{0}'")]
    UnknownField(String),
    #[error(transparent)]
    Parse(#[from] parse::ParseError),
}

// -- dense ℚ[t] helpers, lowest degree first --------------------------------

pub(crate) type QPoly = Vec<Rat>;

pub(crate) fn qp_trim(v: &mut QPoly) {
    while v.last().map(num::Zero::is_zero).unwrap_or(false) {
        v.pop();
    }
}

pub(crate) fn qp_mul(a: &[Rat], b: &[Rat]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if num::Zero::is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qp_trim(&mut out);
    out
}

pub(crate) fn qp_add(a: &[Rat], b: &[Rat]) -> QPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    qp_trim(&mut out);
    out
}

/// Remainder of a by the monic polynomial m.
pub(crate) fn qp_rem_monic(a: &[Rat], m: &[Rat]) -> QPoly {
    let deg_m = m.len() - 1;
    let mut r: QPoly = a.to_vec();
    qp_trim(&mut r);
    while r.len() > deg_m {
        let lead = r.last().unwrap().clone();
        let shift = r.len() - 1 - deg_m;
        for (i, c) in m.iter().enumerate() {
            let v = &lead * c;
            r[i + shift] -= v;
        }
        qp_trim(&mut r);
    }
    r
}

/// p(q) mod m via Horner, all mod the monic m.
fn qp_compose_mod(p: &[Rat], q: &[Rat], m: &[Rat]) -> QPoly {
    let mut acc: QPoly = vec![];
    for c in p.iter().rev() {
        acc = qp_mul(&acc, q);
        if !num::Zero::is_zero(c) {
            acc = qp_add(&acc, &[c.clone()]);
        }
        acc = qp_rem_monic(&acc, m);
    }
    acc
}

// ---------------------------------------------------------------------------

#[derive(Debug)]
struct NfInner {
    /// Monic modulus m(t), lowest degree first, length degree+1.
    modulus: QPoly,
    /// σ(t) as a polynomial in t, reduced mod m.
    conj_image: QPoly,
    /// Box containing exactly one root of m: the chosen embedding.
    embedding_hint: ComplexBox,
    /// Irreducibility is only proved for degree <= 4.
    irreducibility_verified: bool,
    name: String,
    /// Cache of (precision bits, refined root box).
    root_cache: RwLock<Option<(u32, ComplexBox)>>,
}

#[derive(Debug, Clone)]
pub struct NumberField {
    inner: Arc<NfInner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.modulus == other.inner.modulus
                && self.inner.conj_image == other.inner.conj_image)
    }
}

impl NumberField {
    pub fn new(
        modulus: QPoly,
        conj_image: QPoly,
        embedding_hint: ComplexBox,
        name: &str,
    ) -> Result<NumberField, NfError> {
        let mut m = modulus;
        qp_trim(&mut m);
        if m.len() < 2 || !m.last().unwrap().is_one() {
            return Err(NfError::BadModulus);
        }
        let mut conj = qp_rem_monic(&conj_image, &m);
        qp_trim(&mut conj);
        // σ must be a root of m again ...
        let m_of_conj = qp_compose_mod(&m, &conj, &m);
        if !m_of_conj.is_empty() {
            return Err(NfError::BadConjugation);
        }
        // ... and an involution.
        let twice = qp_compose_mod(&conj, &conj, &m);
        let t_poly: QPoly = vec![Rat::zero(), Rat::one()];
        let mut tp = t_poly.clone();
        qp_trim(&mut tp);
        if qp_rem_monic(&twice, &m) != qp_rem_monic(&tp, &m) {
            return Err(NfError::BadConjugation);
        }
        let deg = m.len() - 1;
        let verified = if deg <= 4 {
            if let Some(factor) = rational_factor_deg_le4(&m) {
                return Err(NfError::NotIrreducible(factor));
            }
            true
        } else {
            false
        };
        Ok(NumberField {
            inner: Arc::new(NfInner {
                modulus: m,
                conj_image: conj,
                embedding_hint,
                irreducibility_verified: verified,
                name: name.to_string(),
                root_cache: RwLock::new(None),
            }),
        })
    }

    pub fn from_strings(
        modulus: &str,
        conjugation: &str,
        hint: ComplexBox,
        name: &str,
    ) -> Result<NumberField, NfError> {
        let m = parse::parse_rational_poly(modulus)?;
        let c = parse::parse_rational_poly(conjugation)?;
        NumberField::new(m, c, hint, name)
    }

    /// Built-in fields: "rationals", "eisenstein", "gaussian", "cyclotomic:n".
    pub fn by_name(name: &str) -> Result<NumberField, NfError> {
        match name {
            "rationals" => NumberField::rationals(),
            "eisenstein" => NumberField::eisenstein(),
            "gaussian" => NumberField::gaussian(),
            _ => {
                if let Some(ns) = name.strip_prefix("cyclotomic:") {
                    let n: u32 = ns
                        .parse()
                        .map_err(|_| NfError::UnknownField(name.to_string()))?;
                    NumberField::cyclotomic(n)
                } else {
                    Err(NfError::UnknownField(name.to_string()))
                }
            }
        }
    }

    pub fn rationals() -> Result<NumberField, NfError> {
        let q = |n: i64| Rat::from_integer(n.into());
        NumberField::new(
            vec![q(0), q(1)],
            vec![q(0), q(1)],
            ComplexBox::new(
                Interval::new(BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())),
                Interval::new(BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())),
            ),
            "rationals",
        )
    }

    /// ℚ(ω), ω a primitive cube root of unity with positive imaginary part.
    pub fn eisenstein() -> Result<NumberField, NfError> {
        let q = |n: i64| Rat::from_integer(n.into());
        NumberField::new(
            vec![q(1), q(1), q(1)],
            vec![q(-1), q(-1)],
            ComplexBox::new(
                Interval::new(BigRational::new((-3).into(), 5.into()), BigRational::new((-2).into(), 5.into())),
                Interval::new(BigRational::new(4.into(), 5.into()), BigRational::new(9.into(), 10.into())),
            ),
            "eisenstein",
        )
    }

    /// ℚ(i), i the root with positive imaginary part.
    pub fn gaussian() -> Result<NumberField, NfError> {
        let q = |n: i64| Rat::from_integer(n.into());
        NumberField::new(
            vec![q(1), q(0), q(1)],
            vec![q(0), q(-1)],
            ComplexBox::new(
                Interval::new(BigRational::new((-1).into(), 10.into()), BigRational::new(1.into(), 10.into())),
                Interval::new(BigRational::new(9.into(), 10.into()), BigRational::new(11.into(), 10.into())),
            ),
            "gaussian",
        )
    }

    /// ℚ(ζ_n) with ζ_n = e^{2πi/n}; conjugation sends t to t^{n-1}.
    pub fn cyclotomic(n: u32) -> Result<NumberField, NfError> {
        if n == 0 {
            return Err(NfError::UnknownField("cyclotomic:0".into()));
        }
        if n <= 2 {
            return NumberField::rationals();
        }
        let m = cyclotomic_poly(n);
        let deg = m.len() - 1;
        // σ(t) = t^{n-1} = conjugate root, reduced mod Φ_n
        let mut conj = vec![Rat::zero(); n as usize];
        conj[(n - 1) as usize] = Rat::one();
        let conj = qp_rem_monic(&conj, &m);
        let theta = 2.0 * std::f64::consts::PI / n as f64;
        let sep = (theta / 2.0).sin().abs().min(0.01);
        let hint = ComplexBox::new(
            Interval::new(
                rat_from_f64(theta.cos() - sep),
                rat_from_f64(theta.cos() + sep),
            ),
            Interval::new(
                rat_from_f64(theta.sin() - sep),
                rat_from_f64(theta.sin() + sep),
            ),
        );
        let name = format!("cyclotomic:{n}");
        if deg <= 4 {
            NumberField::new(m, conj, hint, &name)
        } else {
            // degree > 4: irreducibility of Φ_n is classical; recorded as
            // caller-asserted by the constructor
            NumberField::new(m, conj, hint, &name)
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn modulus(&self) -> &[Rat] {
        &self.inner.modulus
    }

    pub fn conj_image(&self) -> &[Rat] {
        &self.inner.conj_image
    }

    pub fn irreducibility_verified(&self) -> bool {
        self.inner.irreducibility_verified
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: vec![Rat::zero(); self.degree()],
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rat::one())
    }

    pub fn from_rational(&self, q: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree()];
        coords[0] = q;
        let mut e = FieldElement { coords, field: self.clone() };
        e.reduce();
        e
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_rational(Rat::from_integer(n.into()))
    }

    /// The residue class of t.
    pub fn generator(&self) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree().max(1)];
        if self.degree() >= 2 {
            coords[1] = Rat::one();
        } else {
            // degree 1: t ≡ -m[0]
            coords[0] = -self.inner.modulus[0].clone();
        }
        FieldElement { coords: coords[..self.degree()].to_vec(), field: self.clone() }
    }

    pub fn element_from_coords(&self, coords: Vec<Rat>) -> FieldElement {
        let mut c = coords;
        c.resize(self.degree().max(c.len()), Rat::zero());
        let c = qp_rem_monic(&c, &self.inner.modulus);
        let mut coords = c;
        coords.resize(self.degree(), Rat::zero());
        FieldElement { coords, field: self.clone() }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement, NfError> {
        let p = parse::parse_rational_poly(s)?;
        Ok(self.element_from_coords(p))
    }

    /// Refine the embedding root box to width <= 2^-bits, cached.
    pub fn root_box(&self, bits: u32) -> Result<ComplexBox, NfError> {
        {
            let cache = self.inner.root_cache.read().unwrap();
            if let Some((b, ref bx)) = *cache {
                if b >= bits {
                    return Ok(bx.clone());
                }
            }
        }
        let bx = self.refine_root(bits)?;
        let mut cache = self.inner.root_cache.write().unwrap();
        *cache = Some((bits, bx.clone()));
        Ok(bx)
    }

    fn refine_root(&self, bits: u32) -> Result<ComplexBox, NfError> {
        let m = &self.inner.modulus;
        if m.len() == 2 {
            // linear: exact root
            let root = -m[0].clone();
            return Ok(ComplexBox::real_point(root));
        }
        let n = (m.len() - 1) as u32;
        let deriv: QPoly = m
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        let hint = &self.inner.embedding_hint;
        let (mut zr, mut zi) = (hint.re.mid(), hint.im.mid());
        let work_bits = bits + 64;
        let target = Rat::new(BigInt::one(), BigInt::one() << (bits + 2));
        for _ in 0..64 {
            let (pr, pi) = eval_complex(m, &zr, &zi);
            let (dr, di) = eval_complex(&deriv, &zr, &zi);
            let dnorm = &dr * &dr + &di * &di;
            if num::Zero::is_zero(&dnorm) {
                return Err(NfError::PrecisionExhausted);
            }
            // bound: distance to nearest root <= n*|p(z)/p'(z)|
            let pnorm = &pr * &pr + &pi * &pi;
            let ratio2 = &pnorm / &dnorm; // |p/p'|^2
            let bound = rat_sqrt_upper(&ratio2) * Rat::from_integer(BigInt::from(n));
            if bound <= target {
                let bx = ComplexBox::new(
                    Interval::new(&zr - &bound, &zr + &bound),
                    Interval::new(&zi - &bound, &zi + &bound),
                );
                // stay inside the isolating hint so we track the right root
                if hint.re.contains(&zr) && hint.im.contains(&zi) {
                    return Ok(bx);
                }
                return Err(NfError::PrecisionExhausted);
            }
            // Newton step: z -= p/p' = p * conj(p') / |p'|^2
            let qr = (&pr * &dr + &pi * &di) / &dnorm;
            let qi = (&pi * &dr - &pr * &di) / &dnorm;
            zr = round_bits(&(&zr - &qr), work_bits);
            zi = round_bits(&(&zi - &qi), work_bits);
        }
        Err(NfError::PrecisionExhausted)
    }

    pub fn hint(&self) -> &ComplexBox {
        &self.inner.embedding_hint
    }
}

fn round_bits(x: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::new(scale.clone(), BigInt::one());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor();
    BigRational::new(rounded.to_integer(), scale)
}

fn eval_complex(p: &[Rat], zr: &Rat, zi: &Rat) -> (Rat, Rat) {
    let mut ar = Rat::zero();
    let mut ai = Rat::zero();
    for c in p.iter().rev() {
        let nr = &ar * zr - &ai * zi + c;
        let ni = &ar * zi + &ai * zr;
        ar = nr;
        ai = ni;
    }
    (ar, ai)
}

/// Upper bound for sqrt of a nonnegative rational.
fn rat_sqrt_upper(x: &Rat) -> Rat {
    if num::Zero::is_zero(x) {
        return Rat::zero();
    }
    let p = x.numer();
    let q = x.denom();
    // sqrt(p/q) = sqrt(p*q)/q <= (isqrt(p*q)+1)/q
    let s = (p * q).sqrt() + BigInt::one();
    BigRational::new(s, q.clone())
}

// -- irreducibility for degree <= 4 -----------------------------------------

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // trial division; moduli handled here have small coefficients
    let n = n.abs();
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn qp_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Returns Some(description of a factor) when the monic polynomial of
/// degree 2..4 is reducible over ℚ, None when irreducible.
fn rational_factor_deg_le4(m: &[Rat]) -> Option<String> {
    let deg = m.len() - 1;
    if deg <= 1 {
        return None;
    }
    // integer model: multiply by lcm of denominators
    let mut lcm = BigInt::one();
    for c in m {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ip: Vec<BigInt> = m
        .iter()
        .map(|c| (c * BigRational::new(lcm.clone(), BigInt::one())).to_integer())
        .collect();
    if ip[0].is_zero() {
        return Some("t".into());
    }
    // rational roots p/q with p | a0, q | an
    for p in divisors(&ip[0]) {
        for q in divisors(ip.last().unwrap()) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                if num::Zero::is_zero(&qp_eval(m, &cand)) {
                    return Some(format!("t - ({cand})"));
                }
            }
        }
    }
    if deg < 4 {
        return None;
    }
    // quadratic factor search for quartics, integer factor model
    // (r t^2 + s t + u)(v t^2 + w t + e) with r v = a4, u e = a0
    let a4 = ip[4].clone();
    let a3 = ip[3].clone();
    let a2 = ip[2].clone();
    let a1 = ip[1].clone();
    let a0 = ip[0].clone();
    for r in divisors(&a4) {
        let v = &a4 / &r;
        for u0 in divisors(&a0) {
            for su in [1i64, -1] {
                let u = &u0 * BigInt::from(su);
                if (&a0 % &u).is_zero() {
                    let e = &a0 / &u;
                    // a3 = r w + s v ; a1 = s e + u w  -> 2x2 linear in (s, w)
                    let det = &v * &e - &r * &u;
                    if det.is_zero() {
                        // the two linear conditions are dependent; eliminate w
                        // via a3 and the a2 constraint: v s^2 - a3 s + c = 0
                        let cq = &a2 * &r - &r * &r * &e - &r * &u * &v;
                        let disc = &a3 * &a3 - BigInt::from(4) * &v * &cq;
                        if disc >= BigInt::zero() {
                            let sq = disc.sqrt();
                            if &sq * &sq == disc {
                                for s_num in [&a3 + &sq, &a3 - &sq] {
                                    let den = BigInt::from(2) * &v;
                                    if (&s_num % &den).is_zero() {
                                        let s = &s_num / &den;
                                        let w_num = &a3 - &s * &v;
                                        if (&w_num % &r).is_zero() {
                                            let w = &w_num / &r;
                                            if &s * &e + &u * &w == a1
                                                && &r * &e + &s * &w + &u * &v == a2
                                            {
                                                return Some(format!("({r}t^2+{s}t+{u})"));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                        continue;
                    }
                    let s_num = &a3 * &e - &a1 * &r;
                    let w_num = &a1 * &v - &a3 * &u;
                    if !(&s_num % &det).is_zero() || !(&w_num % &det).is_zero() {
                        continue;
                    }
                    let s = s_num / &det;
                    let w = w_num / &det;
                    if &r * &e + &s * &w + &u * &v == a2 {
                        return Some(format!("({r}t^2+{s}t+{u})"));
                    }
                }
            }
        }
    }
    None
}

/// Φ_n by dividing t^n - 1 by the cyclotomic polynomials of proper divisors.
fn cyclotomic_poly(n: u32) -> QPoly {
    fn qp_div_exact(num: &[Rat], den: &[Rat]) -> QPoly {
        let mut r: QPoly = num.to_vec();
        let mut q = vec![Rat::zero(); num.len() - den.len() + 1];
        let dlead = den.last().unwrap();
        while r.len() >= den.len() && !r.is_empty() {
            let lead = r.last().unwrap() / dlead;
            let shift = r.len() - den.len();
            q[shift] = lead.clone();
            for (i, c) in den.iter().enumerate() {
                let v = &lead * c;
                r[i + shift] -= v;
            }
            qp_trim(&mut r);
        }
        assert!(r.is_empty(), "non-exact division in cyclotomic recursion");
        q
    }
    let mut poly = vec![Rat::zero(); (n + 1) as usize];
    poly[0] = -Rat::one();
    poly[n as usize] = Rat::one();
    let mut result = poly;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            result = qp_div_exact(&result, &phi_d);
        }
    }
    result
}

// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct FieldElement {
    coords: Vec<Rat>,
    field: NumberField,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl FieldElement {
    fn reduce(&mut self) {
        let deg = self.field.degree();
        let r = qp_rem_monic(&self.coords, self.field.modulus());
        self.coords = r;
        self.coords.resize(deg, Rat::zero());
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(self.field == other.field, "field mismatch");
    }

    pub fn conjugate(&self) -> FieldElement {
        let img = qp_compose_mod(&self.coords, self.field.conj_image(), self.field.modulus());
        let mut coords = img;
        coords.resize(self.field.degree(), Rat::zero());
        FieldElement { coords, field: self.field.clone() }
    }

    pub fn is_fixed(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(num::Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coords.first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex interval containing the image under the chosen embedding,
    /// of width <= 2^(1-precision) * max(1, |a|).
    pub fn embed(&self, precision: u32) -> Result<ComplexBox, NfError> {
        let prec = precision.max(16);
        if self.is_rational() {
            let q = self.as_rational().unwrap();
            return Ok(ComplexBox::real_point(q));
        }
        let tol_den = BigInt::one() << (prec - 1);
        let mut root_bits = prec + 16;
        for _ in 0..10 {
            let root = self.field.root_box(root_bits)?;
            let mut acc = ComplexBox::real_point(Rat::zero());
            for c in self.coords.iter().rev() {
                acc = acc.mul(&root);
                acc = acc.add(&ComplexBox::real_point(c.clone()));
                acc = acc.coarsen(root_bits + 32);
            }
            let scale = {
                let m = acc.abs_hi();
                if m > Rat::one() {
                    m
                } else {
                    Rat::one()
                }
            };
            let tol = &scale * BigRational::new(BigInt::one(), tol_den.clone());
            if acc.width() <= tol {
                return Ok(acc);
            }
            root_bits *= 2;
        }
        Err(NfError::PrecisionExhausted)
    }
}

impl Ring for FieldElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(num::Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement { coords, field: self.field.clone() }
    }
    fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement { coords, field: self.field.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let prod = qp_mul(&self.coords, &other.coords);
        let mut e = FieldElement { coords: prod, field: self.field.clone() };
        e.reduce();
        e
    }
    fn neg(&self) -> Self {
        FieldElement {
            coords: self.coords.iter().map(|c| -c).collect(),
            field: self.field.clone(),
        }
    }
}

impl Field for FieldElement {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        // extended Euclid in ℚ[t] against the modulus
        let mut r0: QPoly = self.field.modulus().to_vec();
        let mut r1: QPoly = self.coords.clone();
        qp_trim(&mut r1);
        let mut s0: QPoly = vec![];
        let mut s1: QPoly = vec![Rat::one()];
        while !r1.is_empty() {
            // r0 = q*r1 + r
            let (q, r) = qp_divmod(&r0, &r1);
            let s = qp_sub(&s0, &qp_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd, must be a nonzero constant since m is irreducible
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip();
        let inv: QPoly = s0.iter().map(|x| x * &c).collect();
        Some(self.field.element_from_coords(inv))
    }
}

pub(crate) fn qp_sub(a: &[Rat], b: &[Rat]) -> QPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    qp_trim(&mut out);
    out
}

pub(crate) fn qp_divmod(a: &[Rat], b: &[Rat]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r: QPoly = a.to_vec();
    qp_trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    let blead = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let lead = r.last().unwrap() / blead;
        let shift = r.len() - b.len();
        q[shift] = lead.clone();
        for (i, c) in b.iter().enumerate() {
            let v = &lead * c;
            r[i + shift] -= v;
        }
        qp_trim(&mut r);
    }
    qp_trim(&mut q);
    (q, r)
}

impl std::fmt::Display for FieldElement {
    /// Polynomial in t, descending powers, e.g. `72t-33` or `-1/2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in self.coords.iter().enumerate().rev() {
            if num::Zero::is_zero(c) {
                continue;
            }
            let abs = c.abs();
            let coeff_str = if abs.is_one() && i > 0 {
                String::new()
            } else {
                format!("{abs}")
            };
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            let body = match (coeff_str.is_empty(), var.is_empty()) {
                (true, _) => var,
                (false, true) => coeff_str,
                (false, false) => format!("{coeff_str}*{var}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push(format!("{sign}{body}"));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = terms.join("");
        if s.starts_with('+') {
            s.remove(0);
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn eisenstein_omega_squared() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        // ω² = -1-ω
        let w2 = w.mul(&w);
        let expect = k.from_integer(-1).sub(&w);
        assert_eq!(w2, expect);
    }

    #[test]
    fn conjugate_omega() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        let wb = w.conjugate();
        assert_eq!(wb, k.from_integer(-1).sub(&w));
        assert_eq!(wb.conjugate(), w);
        assert!(!w.is_fixed());
        assert!(w.add(&wb).is_fixed());
    }

    #[test]
    fn division_in_eisenstein() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        // 1/ω = ω² = -1-ω
        let inv = w.inv().unwrap();
        assert_eq!(inv, k.from_integer(-1).sub(&w));
        assert_eq!(inv.mul(&w), k.one());
    }

    #[test]
    fn rationals_collapse() {
        let k = NumberField::rationals().unwrap();
        let t = k.generator();
        assert!(Ring::is_zero(&t));
        let x = k.from_rational(BigRational::new(3.into(), 2.into()));
        assert_eq!(x.as_rational().unwrap(), BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn gaussian_i_squared() {
        let k = NumberField::gaussian().unwrap();
        let i = k.generator();
        assert_eq!(i.mul(&i), k.from_integer(-1));
        assert_eq!(i.conjugate(), i.neg());
    }

    #[test]
    fn reducible_rejected() {
        let bad = NumberField::from_strings(
            "t^2-1",
            "t",
            ComplexBox::real_point(q(1)),
            "bad",
        );
        assert!(matches!(bad, Err(NfError::NotIrreducible(_))));
        let bad4 = NumberField::from_strings(
            "t^4+4",
            "t",
            ComplexBox::real_point(q(1)),
            "bad4",
        );
        // t^4+4 = (t^2-2t+2)(t^2+2t+2)
        assert!(matches!(bad4, Err(NfError::NotIrreducible(_))));
    }

    #[test]
    fn cyclotomic_8() {
        let k = NumberField::cyclotomic(8).unwrap();
        assert_eq!(k.degree(), 4);
        let z = k.generator();
        assert_eq!(z.pow(8), k.one());
        assert!(z.pow(4) != k.one());
        // ζ·σ(ζ) = 1 on the unit circle
        assert_eq!(z.mul(&z.conjugate()), k.one());
    }

    #[test]
    fn cyclotomic_5_phi() {
        let k = NumberField::cyclotomic(5).unwrap();
        assert_eq!(k.degree(), 4);
        let z = k.generator();
        assert_eq!(z.pow(5), k.one());
    }

    #[test]
    fn embed_omega() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        let bx = w.embed(53).unwrap();
        let (re, im) = bx.to_f64();
        assert!((re + 0.5).abs() < 1e-9);
        assert!((im - 0.8660254037844386).abs() < 1e-9);
        // conjugate embeds into the mirror box
        let bxc = w.conjugate().embed(53).unwrap();
        let (rec, imc) = bxc.to_f64();
        assert!((rec + 0.5).abs() < 1e-9);
        assert!((imc + 0.8660254037844386).abs() < 1e-9);
    }

    #[test]
    fn embed_product_norm() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        let n = w.mul(&w.conjugate());
        assert_eq!(n, k.one());
        let bx = n.embed(53).unwrap();
        let (re, im) = bx.to_f64();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn conjugation_ring_hom() {
        let k = NumberField::eisenstein().unwrap();
        let w = k.generator();
        let a = w.mul(&k.from_integer(3)).add(&k.from_integer(2));
        let b = w.sub(&k.from_integer(5));
        assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        assert_eq!(a.add(&b).conjugate(), a.conjugate().add(&b.conjugate()));
    }

    #[test]
    fn parse_element_strings() {
        let k = NumberField::eisenstein().unwrap();
        let e = k.parse_element("72t-33").unwrap();
        let w = k.generator();
        assert_eq!(e, w.mul(&k.from_integer(72)).add(&k.from_integer(-33)));
        let disp = format!("{e}");
        assert_eq!(disp, "72*t-33");
    }
}
