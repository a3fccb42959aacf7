//! The full pipeline: from an elliptic curve with a conjugation-avoiding
//! ℓ-torsion point and a non-halvable 2-torsion point to a certified pair
//! (f, g) of degree-ℓ rational functions with f∘g real.

pub mod catalog;
mod catalog_data;
pub mod certify;
pub mod quotient;
pub mod sample;

use num::{BigRational, One, Zero};
use thiserror::Error;

use crate::elliptic::{
    dual_isogeny, ec_add, ec_mul, halving_obstruction, torsion_conjugate_check, velu_from_kernel,
    CurvePoint, EcError, EllipticCurve, Isogeny,
};
use crate::field::Ring;
use crate::interval::Rat;
use crate::moebius::{MoebiusError, MoebiusTransform};
use crate::numfield::{FieldElement, NfError, NumberField};
use crate::poly::Polynomial;
use crate::ratfn::{ExtValue, RatFn};
use certify::{certify_injective, circle_test, CertifyError, CircleVerdict, InjectivityVerdict};
use quotient::{eliminate_pushforward, QuotientError, QuotientMap};

type FRat = RatFn<FieldElement>;
type FPoly = Polynomial<FieldElement>;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("torsion point fails the conjugate-kernel precondition")]
    TorsionCheckFailed,
    #[error("2-torsion point does not obstruct real halving")]
    HalvingObstructionFailed,
    #[error("composed function is not σ-fixed: internal consistency failure")]
    RealnessFailed,
    #[error("component degree differs from ℓ")]
    DegreeMismatch,
    #[error("descent to a quadratic subfield failed: {0}")]
    DescentFailed(String),
    #[error("normalization Möbius transform is not σ-fixed")]
    NonRealMoebius,
    #[error(transparent)]
    Ec(#[from] EcError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Field(#[from] NfError),
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

#[derive(Debug, Clone)]
pub struct Certificates {
    pub real: bool,
    pub injectivity: InjectivityVerdict,
    pub circle: CircleVerdict,
}

/// Everything needed to replay the commutative diagram behind a pair.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub curve: EllipticCurve,
    pub kernel: FPoly,
    pub w: CurvePoint,
    pub isogeny: Isogeny,
    pub dual: Isogeny,
    pub psi_src: QuotientMap,
    pub psi_mid: QuotientMap,
    pub psi_dst: QuotientMap,
}

#[derive(Debug, Clone)]
pub struct ConstructionPair {
    pub f: FRat,
    pub g: FRat,
    pub h: FRat,
    pub ell: u32,
    pub provenance: Provenance,
    pub certificates: Certificates,
}

fn coord(e: &FieldElement, i: usize) -> Rat {
    e.coords().get(i).cloned().unwrap_or_else(Rat::zero)
}

/// Maps elements of a big field that happen to lie in ℚ(gen) into the
/// standalone quadratic field generated by gen.
struct Descent {
    field: NumberField,
    gen: FieldElement,
    pivot: usize,
}

/// Write x = u + v·gen exactly, or fail.
fn express_in_basis(
    gen: &FieldElement,
    pivot: usize,
    x: &FieldElement,
) -> Result<(Rat, Rat), ConstructionError> {
    if let Some(q) = x.as_rational() {
        return Ok((q, Rat::zero()));
    }
    let gp = coord(gen, pivot);
    let v = coord(x, pivot) / gp;
    let u = coord(x, 0) - &v * coord(gen, 0);
    let k = x.field();
    let recon = gen
        .mul(&k.from_rational(v.clone()))
        .add(&k.from_rational(u.clone()));
    if recon != *x {
        return Err(ConstructionError::DescentFailed(
            "element outside the quadratic subfield".into(),
        ));
    }
    Ok((u, v))
}

impl Descent {
    fn map(&self, x: &FieldElement) -> Result<FieldElement, ConstructionError> {
        let (u, v) = express_in_basis(&self.gen, self.pivot, x)?;
        Ok(self.field.element_from_coords(vec![u, v]))
    }

    fn map_poly(&self, p: &FPoly) -> Result<FPoly, ConstructionError> {
        let coeffs: Result<Vec<_>, _> = p.coeffs().iter().map(|c| self.map(c)).collect();
        Ok(Polynomial::new(coeffs?))
    }
}

/// The kernel coefficients of the catalog curves generate a quadratic
/// subfield of the (possibly huge) torsion field; rebuild it as a
/// standalone field so all later arithmetic is over degree ≤ 2.
fn quadratic_descent(kernel: &FPoly) -> Result<Option<Descent>, ConstructionError> {
    let big = kernel.leading().unwrap().field().clone();
    if big.degree() <= 2 {
        return Ok(None);
    }
    let gen = kernel
        .coeffs()
        .iter()
        .find(|c| c.as_rational().is_none())
        .cloned()
        .ok_or_else(|| {
            ConstructionError::DescentFailed("all kernel coefficients rational".into())
        })?;
    let pivot = (1..big.degree())
        .find(|&i| !num::Zero::is_zero(&coord(&gen, i)))
        .ok_or_else(|| ConstructionError::DescentFailed("degenerate generator".into()))?;
    // minimal polynomial t² + α t + β of gen from two coordinates
    let sq = gen.mul(&gen);
    let alpha = -coord(&sq, pivot) / coord(&gen, pivot);
    let beta = -coord(&sq, 0) - &alpha * coord(&gen, 0);
    let recon = sq
        .add(&gen.mul(&big.from_rational(alpha.clone())))
        .add(&big.from_rational(beta.clone()));
    if !Ring::is_zero(&recon) {
        return Err(ConstructionError::DescentFailed(
            "kernel coefficient has degree > 2".into(),
        ));
    }
    // σ restricted to the subfield: ḡ = u + v·gen
    let (u, v) = express_in_basis(&gen, pivot, &gen.conjugate())?;
    let hint = gen.embed(96)?;
    let field = NumberField::new(
        vec![beta, alpha, Rat::one()],
        vec![u, v],
        hint,
        "quadratic-descent",
    )?;
    Ok(Some(Descent { field, gen, pivot }))
}

/// Build the certified pair (f, g) with f∘g real from (E, c, w, ℓ).
pub fn build_pair(
    e: &EllipticCurve,
    c: &CurvePoint,
    w: &CurvePoint,
    ell: u32,
) -> Result<ConstructionPair, ConstructionError> {
    if !torsion_conjugate_check(e, c, ell) {
        return Err(ConstructionError::TorsionCheckFailed);
    }
    if !halving_obstruction(e, w)? {
        return Err(ConstructionError::HalvingObstructionFailed);
    }
    let k = e.field().clone();
    // kernel polynomial: one linear factor per ± pair of multiples of c
    let mut kernel: FPoly = Polynomial::constant(k.one());
    let mut pt = c.clone();
    for _ in 0..((ell - 1) / 2) {
        let (x, _) = pt.coords().ok_or(ConstructionError::TorsionCheckFailed)?;
        kernel = kernel.mul(&Polynomial::new(vec![x.neg(), k.one()]));
        pt = ec_add(&pt, c)?;
    }

    let (e2, kernel2, w2) = match quadratic_descent(&kernel)? {
        None => (e.clone(), kernel, w.clone()),
        Some(d) => {
            let e2 = EllipticCurve::new(d.map(e.a())?, d.map(e.b())?)?;
            let kernel2 = d.map_poly(&kernel)?;
            let w2 = match w.coords() {
                None => e2.infinity(),
                Some((wx, wy)) => e2.point(d.map(wx)?, d.map(wy)?)?,
            };
            (e2, kernel2, w2)
        }
    };

    let phi = velu_from_kernel(&e2, &kernel2, ell)?;
    let dual = dual_isogeny(&phi, ell)?;
    let w_mid = phi.apply(&w2)?;
    let w_dst = ec_mul(ell as i64, &w2);
    let psi_src = QuotientMap::new(&e2, &w2)?;
    let psi_mid = QuotientMap::new(&phi.codomain, &w_mid)?;
    let psi_dst = QuotientMap::new(&dual.codomain, &w_dst)?;

    let g = eliminate_pushforward(&phi, &psi_src, &psi_mid)?;
    let f = eliminate_pushforward(&dual, &psi_mid, &psi_dst)?;
    if g.degree() != ell as usize || f.degree() != ell as usize {
        return Err(ConstructionError::DegreeMismatch);
    }
    let h = f.compose(&g);
    if !h.is_real() {
        return Err(ConstructionError::RealnessFailed);
    }
    let certificates = Certificates {
        real: true,
        circle: circle_test(&g)?,
        injectivity: certify_injective(&g)?,
    };
    Ok(ConstructionPair {
        f,
        g,
        h,
        ell,
        provenance: Provenance {
            curve: e2,
            kernel: kernel2,
            w: w2,
            isogeny: phi,
            dual,
            psi_src,
            psi_mid,
            psi_dst,
        },
        certificates,
    })
}

/// Apply the cosmetic change of coordinates g ↦ μ∘g∘inner,
/// f ↦ outer∘f∘μ⁻¹ (so h ↦ outer∘h∘inner) and recompute certificates.
/// inner and outer must be σ-fixed; the middle μ defaults to the identity
/// and may be arbitrary since it cancels in h.
pub fn normalize_pair(
    pair: &ConstructionPair,
    inner: &MoebiusTransform,
    outer: &MoebiusTransform,
    middle: Option<&MoebiusTransform>,
) -> Result<ConstructionPair, ConstructionError> {
    if !inner.is_real() || !outer.is_real() {
        return Err(ConstructionError::NonRealMoebius);
    }
    let field = pair.g.num().leading().unwrap().field().clone();
    let mid = middle.cloned().unwrap_or_else(|| MoebiusTransform::identity(&field));
    let g = mid.to_ratfn().compose(&pair.g).compose(&inner.to_ratfn());
    let f = outer
        .to_ratfn()
        .compose(&pair.f)
        .compose(&mid.inverse().to_ratfn());
    let h = outer.to_ratfn().compose(&pair.h).compose(&inner.to_ratfn());
    debug_assert_eq!(h, f.compose(&g));
    if !h.is_real() {
        return Err(ConstructionError::RealnessFailed);
    }
    let certificates = Certificates {
        real: true,
        circle: circle_test(&g)?,
        injectivity: certify_injective(&g)?,
    };
    Ok(ConstructionPair {
        f,
        g,
        h,
        ell: pair.ell,
        provenance: pair.provenance.clone(),
        certificates,
    })
}

#[derive(Debug, Clone)]
pub struct NormalizationMatch {
    pub inner: MoebiusTransform,
    pub middle: MoebiusTransform,
    pub outer: MoebiusTransform,
}

/// Rationals of height (max of |numerator|, denominator) up to h, ordered
/// by increasing height.
fn height_rationals(h: i64) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    for height in 1..=h {
        for q in 1..=height {
            let nums: Vec<i64> = if q == height {
                (1..=height).filter(|p| num::integer::gcd(*p, q) == 1).collect()
            } else if num::integer::gcd(height, q) == 1 {
                vec![height]
            } else {
                vec![]
            };
            for p in nums {
                out.push(BigRational::new(p.into(), q.into()));
                out.push(BigRational::new((-p).into(), q.into()));
            }
        }
    }
    out
}

/// Fit the Möbius transform carrying the source values to the target
/// values pointwise; None if no single transform is consistent.
fn fit_pointwise(
    pairs: &[(ExtValue<FieldElement>, ExtValue<FieldElement>)],
) -> Option<MoebiusTransform> {
    let mut sel: Vec<usize> = Vec::new();
    for (idx, (s, d)) in pairs.iter().enumerate() {
        if sel
            .iter()
            .all(|&j| pairs[j].0 != *s && pairs[j].1 != *d)
        {
            sel.push(idx);
        }
        if sel.len() == 3 {
            break;
        }
    }
    if sel.len() < 3 {
        return None;
    }
    let m = MoebiusTransform::from_triples(
        [&pairs[sel[0]].0, &pairs[sel[1]].0, &pairs[sel[2]].0],
        [&pairs[sel[0]].1, &pairs[sel[1]].1, &pairs[sel[2]].1],
    )
    .ok()?;
    for (s, d) in pairs {
        if m.apply(s) != *d {
            return None;
        }
    }
    Some(m)
}

fn sample_pairs(
    src: &FRat,
    dst: &FRat,
    pre: Option<&MoebiusTransform>,
    samples: &[FieldElement],
) -> Vec<(ExtValue<FieldElement>, ExtValue<FieldElement>)> {
    samples
        .iter()
        .map(|x| {
            let xe = ExtValue::Finite(x.clone());
            let arg = match pre {
                Some(m) => m.apply(&xe),
                None => xe.clone(),
            };
            (src.eval_ext(&arg), dst.eval_ext(&xe))
        })
        .collect()
}

/// Slopes reachable as a ratio of two height-bounded rationals (Möbius
/// entries are projective, so z ↦ 24z is admissible at height 12 as
/// (12z)/(1/2)); ordered by the smaller such representation.
fn projective_slopes(rats: &[Rat]) -> Vec<Rat> {
    fn rheight(r: &Rat) -> i64 {
        use num::{Signed, ToPrimitive};
        let n = r.numer().abs().to_i64().unwrap_or(i64::MAX);
        let d = r.denom().to_i64().unwrap_or(i64::MAX);
        n.max(d)
    }
    let mut best: std::collections::BTreeMap<Rat, i64> = std::collections::BTreeMap::new();
    for a in rats {
        for d in rats {
            if num::Zero::is_zero(d) {
                continue;
            }
            let v = a / d;
            let c = rheight(a).max(rheight(d));
            best.entry(v).and_modify(|e| *e = (*e).min(c)).or_insert(c);
        }
    }
    let mut out: Vec<(i64, Rat)> = best.into_iter().map(|(v, c)| (c, v)).collect();
    out.sort();
    out.into_iter().map(|(_, v)| v).collect()
}

/// Search the σ-fixed Möbius pair (inner, outer) and middle μ carrying the
/// raw pair onto printed targets: μ∘g∘inner = target_g and
/// outer∘f∘μ⁻¹ = target_f. Enumerates inner in increasing complexity —
/// pure scalings, then affine maps, then general Möbius — fitting μ and
/// outer from sampled values and verifying symbolically.
pub fn find_normalization(
    pair: &ConstructionPair,
    target_f: &FRat,
    target_g: &FRat,
    height: i64,
) -> Option<NormalizationMatch> {
    let k = pair.g.num().leading().unwrap().field().clone();
    let samples: Vec<FieldElement> = certify::rational_candidates(8)
        .into_iter()
        .map(|r| k.from_rational(r))
        .collect();
    let rats = height_rationals(height);
    let zero = Rat::zero();
    let one = Rat::one();
    let try_entries = |a: &Rat, b: &Rat, c: &Rat, d: &Rat| -> Option<NormalizationMatch> {
        let inner = MoebiusTransform::new(
            k.from_rational(a.clone()),
            k.from_rational(b.clone()),
            k.from_rational(c.clone()),
            k.from_rational(d.clone()),
        )
        .ok()?;
        let middle = fit_pointwise(&sample_pairs(&pair.g, target_g, Some(&inner), &samples))?;
        let gi = pair.g.compose(&inner.to_ratfn());
        if middle.to_ratfn().compose(&gi) != *target_g {
            return None;
        }
        let minv = middle.inverse();
        let outer = fit_pointwise(&sample_pairs(&pair.f, target_f, Some(&minv), &samples))?;
        if outer
            .to_ratfn()
            .compose(&pair.f.compose(&minv.to_ratfn()))
            != *target_f
        {
            return None;
        }
        if !outer.is_real() {
            return None;
        }
        Some(NormalizationMatch { inner, middle, outer })
    };
    let slopes = projective_slopes(&rats);
    // pure scalings first: the intended changes of coordinates are linear
    for a in &slopes {
        if num::Zero::is_zero(a) {
            continue;
        }
        if let Some(m) = try_entries(a, &zero, &zero, &one) {
            return Some(m);
        }
    }
    for a in &slopes {
        if num::Zero::is_zero(a) {
            continue;
        }
        for b in &rats {
            if num::Zero::is_zero(b) {
                continue; // pure scalings already tried
            }
            if let Some(m) = try_entries(a, b, &zero, &one) {
                return Some(m);
            }
        }
    }
    for a in &rats {
        for b in &rats {
            for d in &rats {
                if a * d == *b {
                    continue; // singular
                }
                if let Some(m) = try_entries(a, b, &one, d) {
                    return Some(m);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn printed_targets(k: &NumberField) -> (FRat, FRat, FRat) {
        let f = RatFn::parse("(z^3-6*(t+1)*z)/(3*z^2+1)", k, 'z').unwrap();
        let g = RatFn::parse("(2*z^3+(t+1)*z)/(z^2-t)", k, 'z').unwrap();
        let h = f.compose(&g);
        (f, g, h)
    }

    #[test]
    fn pipeline_on_degree_three_catalog_curve() {
        let ent = catalog::entry("14a2").unwrap();
        let pair = build_pair(&ent.curve, &ent.c, &ent.w, ent.ell).unwrap();
        assert_eq!(pair.g.degree(), 3);
        assert_eq!(pair.f.degree(), 3);
        assert_eq!(pair.h.degree(), 9);
        assert!(pair.h.is_real());
        assert!(matches!(pair.certificates.circle, CircleVerdict::NotCircle));
        assert!(matches!(
            pair.certificates.injectivity,
            InjectivityVerdict::Injective
        ));
    }

    #[test]
    fn normalization_reaches_printed_pair() {
        let ent = catalog::entry("14a2").unwrap();
        let pair = build_pair(&ent.curve, &ent.c, &ent.w, ent.ell).unwrap();
        let (tf, tg, th) = printed_targets(ent.curve.field());
        let m = find_normalization(&pair, &tf, &tg, 12).expect("normalization found");
        assert!(m.inner.is_real() && m.outer.is_real());
        let normalized = normalize_pair(&pair, &m.inner, &m.outer, Some(&m.middle)).unwrap();
        assert_eq!(normalized.g, tg);
        assert_eq!(normalized.f, tf);
        assert_eq!(normalized.h, th);
    }

    #[test]
    fn identity_normalization_is_trivial() {
        let ent = catalog::entry("14a2").unwrap();
        let pair = build_pair(&ent.curve, &ent.c, &ent.w, ent.ell).unwrap();
        let id = MoebiusTransform::identity(ent.curve.field());
        let same = normalize_pair(&pair, &id, &id, None).unwrap();
        assert_eq!(same.g, pair.g);
        assert_eq!(same.f, pair.f);
        assert_eq!(same.h, pair.h);
    }

    #[test]
    fn non_real_normalization_rejected() {
        let ent = catalog::entry("14a2").unwrap();
        let pair = build_pair(&ent.curve, &ent.c, &ent.w, ent.ell).unwrap();
        let k = ent.curve.field();
        let bad = MoebiusTransform::new(k.generator(), k.zero(), k.zero(), k.one()).unwrap();
        assert!(matches!(
            normalize_pair(&pair, &bad, &MoebiusTransform::identity(k), None),
            Err(ConstructionError::NonRealMoebius)
        ));
    }
}
