//! Certificates for a rational function g over a field whose σ-fixed
//! subfield is ℚ: the circle dichotomy for g(ℝ̂), exact injectivity on ℝ̂
//! (with first-class Undecided), and the weak-injectivity semi-decision.

use num::{BigRational, Zero};
use thiserror::Error;

use crate::bipoly::{resultant_y, BiPoly};
use crate::field::Ring;
use crate::interval::{Interval, Rat};
use crate::moebius::MoebiusTransform;
use crate::numfield::{FieldElement, NumberField};
use crate::poly::Polynomial;
use crate::ratfn::{ExtValue, RatFn};
use crate::sturm::{self, IsolatedRoot, QPolynomial};

type FPoly = Polynomial<FieldElement>;
type FRat = RatFn<FieldElement>;
type QBi = BiPoly<BigRational>;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("the σ-fixed subfield of the coefficient field is not ℚ")]
    FixedFieldNotRational,
    #[error("no three rational points with distinct images were found")]
    InsufficientPoints,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RealAlg {
    Rational(Rat),
    Interval(Rat, Rat),
    Infinity,
}

impl RealAlg {
    pub fn describe(&self) -> String {
        match self {
            RealAlg::Rational(r) => format!("{r}"),
            RealAlg::Interval(a, b) => format!("({a}, {b})"),
            RealAlg::Infinity => "inf".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollisionWitness {
    pub a: RealAlg,
    pub b: RealAlg,
}

#[derive(Debug, Clone)]
pub enum InjectivityVerdict {
    Injective,
    NotInjective(CollisionWitness),
    Undecided(String),
}

#[derive(Debug, Clone)]
pub enum CircleVerdict {
    Circle(MoebiusTransform),
    NotCircle,
}

#[derive(Debug, Clone)]
pub enum WeakInjectivity {
    WeaklyInjective { z0: Rat },
    NoWitnessFound { candidates_tried: usize },
}

/// Fix(σ) = ℚ: the field is ℚ itself, or an honest quadratic with σ ≠ id.
pub fn fixed_field_is_rational(k: &NumberField) -> bool {
    match k.degree() {
        1 => true,
        2 => {
            let c = k.conj_image();
            c.len() == 2 && c[1] == -BigRational::from_integer(1.into())
        }
        _ => false,
    }
}

/// e = r + s·δ with δ = t − σ(t) and r, s ∈ ℚ (valid when Fix(σ) = ℚ).
fn split_elem(e: &FieldElement) -> (Rat, Rat) {
    let coords = e.coords();
    let u = coords.first().cloned().unwrap_or_else(|| Rat::zero());
    let v = coords.get(1).cloned().unwrap_or_else(|| Rat::zero());
    if num::Zero::is_zero(&v) {
        return (u, v);
    }
    let c0 = e
        .field()
        .conj_image()
        .first()
        .cloned()
        .unwrap_or_else(|| Rat::zero());
    let two = BigRational::from_integer(2.into());
    (u + &v * &c0 / &two, v / two)
}

pub fn split_poly(p: &FPoly) -> (QPolynomial, QPolynomial) {
    let mut re = Vec::with_capacity(p.coeffs().len());
    let mut im = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let (r, s) = split_elem(c);
        re.push(r);
        im.push(s);
    }
    (Polynomial::new(re), Polynomial::new(im))
}

pub fn split_bipoly(p: &BiPoly<FieldElement>) -> (QBi, QBi) {
    let mut re = Vec::with_capacity(p.coeffs().len());
    let mut im = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let (r, s) = split_poly(c);
        re.push(r);
        im.push(s);
    }
    (BiPoly::new(re), BiPoly::new(im))
}

/// Rationals ordered by height: 0, 1, −1, 2, −2, 1/2, −1/2, 3, …
pub fn rational_candidates(limit: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    let mut h: i64 = 1;
    while out.len() < limit {
        for q in 1..=h {
            let ps: Vec<i64> = if q == h {
                (1..=h).filter(|p| num::integer::gcd(*p, q) == 1).collect()
            } else {
                if num::integer::gcd(h, q) == 1 {
                    vec![h]
                } else {
                    vec![]
                }
            };
            for p in ps {
                out.push(BigRational::new(p.into(), q.into()));
                out.push(BigRational::new((-p).into(), q.into()));
                if out.len() >= limit {
                    return out;
                }
            }
        }
        h += 1;
    }
    out
}

fn ext_conjugate(v: &ExtValue<FieldElement>) -> ExtValue<FieldElement> {
    match v {
        ExtValue::Finite(e) => ExtValue::Finite(e.conjugate()),
        ExtValue::Infinity => ExtValue::Infinity,
    }
}

/// Decide whether some Möbius transform λ makes λ∘g σ-fixed, i.e. whether
/// g(ℝ̂) is a circle (or line) in ℂ̂. The witness normalization sends the
/// images of three rational points to ∞, 0, 1; if even that normalization
/// is not σ-fixed, the cross-check ḡ = ρ∘g must fail and no λ exists.
pub fn circle_test(g: &FRat) -> Result<CircleVerdict, CertifyError> {
    assert!(!g.is_constant(), "nonconstant g required");
    let k = g.num().leading().unwrap().field().clone();
    let mut triple: Vec<ExtValue<FieldElement>> = Vec::new();
    let mut args: Vec<Rat> = Vec::new();
    for r in rational_candidates(64) {
        let v = g.eval_ext(&ExtValue::Finite(k.from_rational(r.clone())));
        if !triple.contains(&v) {
            triple.push(v);
            args.push(r);
        }
        if triple.len() == 3 {
            break;
        }
    }
    if triple.len() < 3 {
        return Err(CertifyError::InsufficientPoints);
    }
    let inf = ExtValue::Infinity;
    let zero = ExtValue::Finite(k.zero());
    let one = ExtValue::Finite(k.one());
    let mu = MoebiusTransform::from_triples(
        [&triple[0], &triple[1], &triple[2]],
        [&inf, &zero, &one],
    )
    .map_err(|_| CertifyError::InsufficientPoints)?;
    let normalized = mu.to_ratfn().compose(g);
    if normalized.is_real() {
        return Ok(CircleVerdict::Circle(mu));
    }
    // cross-check: a circle would force ḡ = ρ∘g for the interpolated ρ
    let conj: Vec<_> = triple.iter().map(ext_conjugate).collect();
    if let Ok(rho) = MoebiusTransform::from_triples(
        [&triple[0], &triple[1], &triple[2]],
        [&conj[0], &conj[1], &conj[2]],
    ) {
        let holds = g.conjugate() == rho.to_ratfn().compose(g);
        debug_assert!(!holds, "cocycle holds but normalization is not real");
        if holds {
            // unreachable by the dichotomy; stay conservative
            return Ok(CircleVerdict::NotCircle);
        }
    }
    Ok(CircleVerdict::NotCircle)
}

/// gcd describing the common real locus of a split pair, with zero parts
/// handled (both zero is the caller's degenerate case).
fn qgcd(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    a.gcd(b)
}

fn strip_factor(mut p: QPolynomial, lin: &QPolynomial) -> QPolynomial {
    loop {
        let (q, r) = p.divmod(lin);
        if r.is_zero() && q.degree().is_some() {
            p = q;
        } else {
            return p;
        }
    }
}

fn strip_common(mut p: QPolynomial, other: &QPolynomial) -> QPolynomial {
    if other.degree().map(|d| d == 0).unwrap_or(true) {
        return p;
    }
    loop {
        let g = qgcd(&p, other);
        if g.degree().map(|d| d == 0).unwrap_or(true) {
            return p;
        }
        p = p.divmod(&g).0;
    }
}

fn poly_box(p: &QPolynomial, i: &Interval) -> Interval {
    let mut acc = Interval::point(Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(i).add(&Interval::point(c.clone()));
    }
    acc
}

fn bipoly_box(p: &QBi, ix: &Interval, iy: &Interval) -> Interval {
    let mut acc = Interval::point(Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(iy).add(&poly_box(c, ix));
    }
    acc
}

fn contains_zero(i: &Interval) -> bool {
    i.contains(&Rat::zero())
}

/// Divide a bivariate polynomial by (y − x); the remainder is returned too.
fn div_by_y_minus_x(p: &BiPoly<FieldElement>) -> (BiPoly<FieldElement>, Polynomial<FieldElement>) {
    let n = match p.degree_y() {
        None => return (BiPoly::zero(), Polynomial::zero()),
        Some(0) => return (BiPoly::zero(), p.coeffs()[0].clone()),
        Some(n) => n,
    };
    let w = p.coeffs()[n].leading().unwrap().clone();
    let x: FPoly = Polynomial::var(&w);
    let mut quot = vec![Polynomial::zero(); n];
    let mut carry = p.coeffs()[n].clone();
    for i in (1..=n).rev() {
        quot[i - 1] = carry.clone();
        carry = p.coeffs()[i - 1].add(&carry.mul(&x));
    }
    (BiPoly::new(quot), carry)
}

fn div_by_y_minus_x_q(p: &QBi) -> (QBi, QPolynomial) {
    let n = match p.degree_y() {
        None => return (BiPoly::zero(), Polynomial::zero()),
        Some(0) => return (BiPoly::zero(), p.coeffs()[0].clone()),
        Some(n) => n,
    };
    let x: QPolynomial = Polynomial::new(vec![Rat::zero(), BigRational::from_integer(1.into())]);
    let mut quot = vec![Polynomial::zero(); n];
    let mut carry = p.coeffs()[n].clone();
    for i in (1..=n).rev() {
        quot[i - 1] = carry.clone();
        carry = p.coeffs()[i - 1].add(&carry.mul(&x));
    }
    (BiPoly::new(quot), carry)
}

fn is_const_bi(p: &QBi) -> bool {
    p.degree_y().map(|d| d == 0).unwrap_or(true)
        && p.degree_x().map(|d| d == 0).unwrap_or(true)
}

struct InjectivityContext {
    g: FRat,
    field: NumberField,
}

impl InjectivityContext {
    fn is_pole(&self, x: &Rat) -> bool {
        Ring::is_zero(&self.g.den().eval(&self.field.from_rational(x.clone())))
    }

    fn values_equal(&self, x: &Rat, y: &Rat) -> bool {
        let gx = self
            .g
            .eval_ext(&ExtValue::Finite(self.field.from_rational(x.clone())));
        let gy = self
            .g
            .eval_ext(&ExtValue::Finite(self.field.from_rational(y.clone())));
        gx == gy
    }
}

/// Exact decision of injectivity of g on ℝ̂ where the implemented fragment
/// reaches it; Undecided otherwise. Never bluffs.
pub fn certify_injective(g: &FRat) -> Result<InjectivityVerdict, CertifyError> {
    assert!(!g.is_constant(), "nonconstant g required");
    let k = g.num().leading().unwrap().field().clone();
    if !fixed_field_is_rational(&k) {
        return Ok(InjectivityVerdict::Undecided(
            "σ-fixed subfield is not ℚ".into(),
        ));
    }
    let p = g.num().clone();
    let q = g.den().clone();
    let (qa, qb) = split_poly(&q);
    let pole_poly = qgcd(&qa, &qb);
    let ctx = InjectivityContext { g: g.clone(), field: k.clone() };

    // poles all map to ∞: two real poles, or one real pole plus ∞ when
    // g(∞) = ∞, are immediate collisions
    let g_at_inf = g.eval_ext(&ExtValue::Infinity);
    if pole_poly.degree().map(|d| d > 0).unwrap_or(false) {
        let poles = sturm::isolate_real_roots(&pole_poly)
            .map_err(|_| CertifyError::FixedFieldNotRational)?;
        let to_alg = |r: &IsolatedRoot| match r {
            IsolatedRoot::Rational(v) => RealAlg::Rational(v.clone()),
            IsolatedRoot::Interval(a, b) => RealAlg::Interval(a.clone(), b.clone()),
        };
        if poles.len() >= 2 {
            return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                a: to_alg(&poles[0]),
                b: to_alg(&poles[1]),
            }));
        }
        if poles.len() == 1 && g_at_inf == ExtValue::Infinity {
            return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                a: to_alg(&poles[0]),
                b: RealAlg::Infinity,
            }));
        }
    }
    // finite partner of the point at infinity
    if let ExtValue::Finite(vinf) = &g_at_inf {
        let shifted = p.sub(&q.scale(vinf));
        let (sa, sb) = split_poly(&shifted);
        if !(sa.is_zero() && sb.is_zero()) {
            let w = qgcd(&sa, &sb);
            if w.degree().map(|d| d > 0).unwrap_or(false) {
                let roots = sturm::isolate_real_roots(&w)
                    .map_err(|_| CertifyError::FixedFieldNotRational)?;
                if let Some(r) = roots.first() {
                    let a = match r {
                        IsolatedRoot::Rational(v) => RealAlg::Rational(v.clone()),
                        IsolatedRoot::Interval(a, b) => RealAlg::Interval(a.clone(), b.clone()),
                    };
                    return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                        a,
                        b: RealAlg::Infinity,
                    }));
                }
            }
        }
    }

    // finite collisions: zeros of H = (p(x)q(y) − p(y)q(x))/(x − y)
    let px = BiPoly::from_x_poly(p.clone());
    let qx = BiPoly::from_x_poly(q.clone());
    let py = BiPoly::new(p.coeffs().iter().cloned().map(Polynomial::constant).collect());
    let qy = BiPoly::new(q.coeffs().iter().cloned().map(Polynomial::constant).collect());
    let h0 = px.mul(&qy).sub(&py.mul(&qx));
    let (h, rem) = div_by_y_minus_x(&h0);
    debug_assert!(rem.is_zero());
    let (a, b) = split_bipoly(&h);
    if a.is_zero() && b.is_zero() {
        return Ok(InjectivityVerdict::Undecided("collision locus degenerate".into()));
    }
    let d = if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a.gcd_y(&b)
    };
    // powers of (x − y) in the common locus only describe the diagonal
    let mut d_reduced = d;
    loop {
        let (quo, rem) = div_by_y_minus_x_q(&d_reduced);
        if rem.is_zero() && !quo.is_zero() {
            d_reduced = quo;
        } else {
            break;
        }
    }

    if !is_const_bi(&d_reduced) {
        // positive-dimensional component: hunt for a rational-x witness
        for x0 in rational_candidates(48) {
            if ctx.is_pole(&x0) {
                continue;
            }
            let s_raw = d_reduced.eval_x_const(&x0);
            if s_raw.is_zero() {
                // whole vertical line: confirm with any exact partner
                for y0 in rational_candidates(16) {
                    if y0 != x0 && !ctx.is_pole(&y0) && ctx.values_equal(&x0, &y0) {
                        return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                            a: RealAlg::Rational(x0),
                            b: RealAlg::Rational(y0),
                        }));
                    }
                }
                continue;
            }
            let lin = Polynomial::new(vec![-x0.clone(), BigRational::from_integer(1.into())]);
            let mut s = strip_factor(s_raw, &lin);
            s = strip_common(s, &pole_poly);
            if s.degree().map(|d| d == 0).unwrap_or(true) {
                continue;
            }
            let roots =
                sturm::isolate_real_roots(&s).map_err(|_| CertifyError::FixedFieldNotRational)?;
            for r in roots {
                match r {
                    IsolatedRoot::Rational(y0) => {
                        if ctx.values_equal(&x0, &y0) {
                            return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                                a: RealAlg::Rational(x0.clone()),
                                b: RealAlg::Rational(y0),
                            }));
                        }
                    }
                    IsolatedRoot::Interval(lo, hi) => {
                        return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                            a: RealAlg::Rational(x0.clone()),
                            b: RealAlg::Interval(lo, hi),
                        }));
                    }
                }
            }
        }
        return Ok(InjectivityVerdict::Undecided(
            "positive-dimensional collision component without a rational witness".into(),
        ));
    }

    // zero-dimensional: candidate coordinates are the real roots of the
    // y-resultant; any real collision has both coordinates among them
    let r = if a.is_zero() {
        resultant_y(&b, &b.clone())
    } else if b.is_zero() {
        resultant_y(&a, &a.clone())
    } else {
        resultant_y(&a, &b)
    };
    if r.is_zero() {
        return Ok(InjectivityVerdict::Undecided("vanishing resultant".into()));
    }
    let r_sf = r.squarefree_part();
    let roots = sturm::isolate_real_roots(&r_sf).map_err(|_| CertifyError::FixedFieldNotRational)?;

    // rational candidates are decided exactly
    let mut irrational: Vec<(Rat, Rat)> = Vec::new();
    for root in &roots {
        match root {
            IsolatedRoot::Rational(x0) => {
                if ctx.is_pole(x0) {
                    continue;
                }
                let sa = a.eval_x_const(x0);
                let sb = b.eval_x_const(x0);
                if sa.is_zero() && sb.is_zero() {
                    return Ok(InjectivityVerdict::Undecided(
                        "vertical component at a rational candidate".into(),
                    ));
                }
                let lin =
                    Polynomial::new(vec![-x0.clone(), BigRational::from_integer(1.into())]);
                let mut s = strip_factor(qgcd(&sa, &sb), &lin);
                s = strip_common(s, &pole_poly);
                if s.degree().map(|d| d == 0).unwrap_or(true) {
                    continue;
                }
                let partners = sturm::isolate_real_roots(&s)
                    .map_err(|_| CertifyError::FixedFieldNotRational)?;
                if let Some(pr) = partners.first() {
                    let b_alg = match pr {
                        IsolatedRoot::Rational(y0) => {
                            if !ctx.values_equal(x0, y0) {
                                continue;
                            }
                            RealAlg::Rational(y0.clone())
                        }
                        IsolatedRoot::Interval(lo, hi) => RealAlg::Interval(lo.clone(), hi.clone()),
                    };
                    return Ok(InjectivityVerdict::NotInjective(CollisionWitness {
                        a: RealAlg::Rational(x0.clone()),
                        b: b_alg,
                    }));
                }
            }
            IsolatedRoot::Interval(lo, hi) => irrational.push((lo.clone(), hi.clone())),
        }
    }

    // distinct irrational candidates exclude pairwise by interval
    // refinement; two collision coordinates can never share an isolating
    // interval, so the diagonal needs no analysis
    let eps_schedule = [10u32, 20, 40, 80, 160];
    for i in 0..irrational.len() {
        for j in (i + 1)..irrational.len() {
            let mut ri = IsolatedRoot::Interval(irrational[i].0.clone(), irrational[i].1.clone());
            let mut rj = IsolatedRoot::Interval(irrational[j].0.clone(), irrational[j].1.clone());
            let mut excluded = false;
            for bits in eps_schedule {
                let eps = BigRational::new(1.into(), num::BigInt::from(2).pow(bits));
                ri = sturm::refine_root(&r_sf, &ri, &eps);
                rj = sturm::refine_root(&r_sf, &rj, &eps);
                let (ix, iy) = match (&ri, &rj) {
                    (IsolatedRoot::Interval(a1, b1), IsolatedRoot::Interval(a2, b2)) => (
                        Interval::new(a1.clone(), b1.clone()),
                        Interval::new(a2.clone(), b2.clone()),
                    ),
                    _ => break, // refinement found an exact rational: rerun path unreachable
                };
                let abox = if a.is_zero() { None } else { Some(bipoly_box(&a, &ix, &iy)) };
                let bbox = if b.is_zero() { None } else { Some(bipoly_box(&b, &ix, &iy)) };
                let a_misses = abox.map(|v| !contains_zero(&v)).unwrap_or(false);
                let b_misses = bbox.map(|v| !contains_zero(&v)).unwrap_or(false);
                if a_misses || b_misses {
                    excluded = true;
                    break;
                }
            }
            if !excluded {
                return Ok(InjectivityVerdict::Undecided(format!(
                    "candidate pair near ({}, {}) not separated",
                    irrational[i].0, irrational[j].0
                )));
            }
        }
    }
    Ok(InjectivityVerdict::Injective)
}

/// Search small-height rational z₀ that g hits exactly once on ℝ̂ and not
/// critically. Absence of a witness proves nothing.
pub fn certify_weakly_injective(g: &FRat) -> Result<WeakInjectivity, CertifyError> {
    assert!(!g.is_constant(), "nonconstant g required");
    let k = g.num().leading().unwrap().field().clone();
    if !fixed_field_is_rational(&k) {
        return Err(CertifyError::FixedFieldNotRational);
    }
    let candidates = rational_candidates(60);
    let deriv = g.derivative();
    let g_at_inf = g.eval_ext(&ExtValue::Infinity);
    for z0 in &candidates {
        let z0e = k.from_rational(z0.clone());
        let v = match g.eval(&z0e) {
            Some(v) => v,
            None => continue, // pole
        };
        // not a critical point
        match deriv.eval(&z0e) {
            Some(d) if !Ring::is_zero(&d) => {}
            _ => continue,
        }
        // ∞ must not be a partner
        if g_at_inf == ExtValue::Finite(v.clone()) {
            continue;
        }
        // real preimages of v besides z₀
        let shifted = g.num().sub(&g.den().scale(&v));
        let (sa, sb) = split_poly(&shifted);
        if sa.is_zero() && sb.is_zero() {
            continue;
        }
        let lin = Polynomial::new(vec![-z0.clone(), BigRational::from_integer(1.into())]);
        let w = strip_factor(qgcd(&sa, &sb), &lin);
        if w.degree().map(|d| d == 0).unwrap_or(true) {
            return Ok(WeakInjectivity::WeaklyInjective { z0: z0.clone() });
        }
        match sturm::count_real_roots(&w) {
            Ok(0) => return Ok(WeakInjectivity::WeaklyInjective { z0: z0.clone() }),
            _ => continue,
        }
    }
    Ok(WeakInjectivity::NoWitnessFound { candidates_tried: candidates.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn printed_g() -> FRat {
        let k = NumberField::eisenstein().unwrap();
        RatFn::parse("(2*z^3+(t+1)*z)/(z^2-t)", &k, 'z').unwrap()
    }

    #[test]
    fn split_roundtrip() {
        let k = NumberField::eisenstein().unwrap();
        let p = RatFn::parse("(t+3)*z^2+2*z-t", &k, 'z').unwrap().num().clone();
        let (a, b) = split_poly(&p);
        // reconstruct: p = A + δB with δ = t − σ(t) = 2t + 1 here
        let delta = k.generator().sub(&k.generator().conjugate());
        let a_k = a.map(|c| k.from_rational(c.clone()));
        let b_k = b.map(|c| k.from_rational(c.clone()));
        let back = a_k.add(&b_k.scale(&delta));
        assert_eq!(back, p);
    }

    #[test]
    fn candidate_order() {
        let c = rational_candidates(7);
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(
            c,
            vec![q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), q(1, 2), q(-1, 2)]
        );
    }

    #[test]
    fn real_function_is_circle() {
        let k = NumberField::eisenstein().unwrap();
        let g = RatFn::parse("(2*z+1)/(z-3)", &k, 'z').unwrap();
        match circle_test(&g).unwrap() {
            CircleVerdict::Circle(mu) => {
                assert!(mu.to_ratfn().compose(&g).is_real());
            }
            CircleVerdict::NotCircle => panic!("real Möbius image must be a circle"),
        }
    }

    #[test]
    fn cayley_image_is_circle() {
        let k = NumberField::gaussian().unwrap();
        let g = RatFn::parse("(z-t)/(z+t)", &k, 'z').unwrap();
        match circle_test(&g).unwrap() {
            CircleVerdict::Circle(mu) => {
                assert!(mu.to_ratfn().compose(&g).is_real());
            }
            CircleVerdict::NotCircle => panic!("Möbius image of the line is a circle"),
        }
    }

    #[test]
    fn printed_g_is_not_circle() {
        match circle_test(&printed_g()).unwrap() {
            CircleVerdict::NotCircle => {}
            CircleVerdict::Circle(_) => panic!("constructed g must not trace a circle"),
        }
    }

    #[test]
    fn square_is_not_injective() {
        let k = NumberField::eisenstein().unwrap();
        let g = RatFn::parse("z^2", &k, 'z').unwrap();
        match certify_injective(&g).unwrap() {
            InjectivityVerdict::NotInjective(w) => {
                let one = BigRational::from_integer(1.into());
                assert_eq!(w.a, RealAlg::Rational(one.clone()));
                assert_eq!(w.b, RealAlg::Rational(-one));
            }
            other => panic!("expected NotInjective, got {other:?}"),
        }
    }

    #[test]
    fn moebius_is_injective() {
        let k = NumberField::eisenstein().unwrap();
        let g = RatFn::parse("(2*z+1)/(z-3)", &k, 'z').unwrap();
        match certify_injective(&g).unwrap() {
            InjectivityVerdict::Injective => {}
            other => panic!("expected Injective, got {other:?}"),
        }
    }

    #[test]
    fn two_real_poles_collide_at_infinity() {
        let k = NumberField::eisenstein().unwrap();
        let g = RatFn::parse("1/(z^2-1)", &k, 'z').unwrap();
        match certify_injective(&g).unwrap() {
            InjectivityVerdict::NotInjective(_) => {}
            other => panic!("expected NotInjective, got {other:?}"),
        }
    }

    #[test]
    fn printed_g_is_injective() {
        match certify_injective(&printed_g()).unwrap() {
            InjectivityVerdict::Injective => {}
            other => panic!("expected Injective, got {other:?}"),
        }
    }

    #[test]
    fn weak_injectivity_examples() {
        let k = NumberField::eisenstein().unwrap();
        let cube = RatFn::parse("z^3", &k, 'z').unwrap();
        match certify_weakly_injective(&cube).unwrap() {
            WeakInjectivity::WeaklyInjective { z0 } => {
                assert_eq!(z0, BigRational::from_integer(1.into()));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        let square = RatFn::parse("z^2", &k, 'z').unwrap();
        match certify_weakly_injective(&square).unwrap() {
            WeakInjectivity::NoWitnessFound { .. } => {}
            other => panic!("expected no witness, got {other:?}"),
        }
    }
}
