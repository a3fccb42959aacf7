//! Classical families of pairs (f, g) with f∘g real: Chebyshev
//! polynomials with unit-circle inner functions, the twisted
//! z^k(1−z)^{n−k} family with its conjugation identity, and the linear
//! realization λ∘g ∈ ℝ[z] for polynomial inner functions.

use num::{BigRational, One, Zero};
use thiserror::Error;

use crate::construction::certify::{circle_test, CircleVerdict};
use crate::construction::sample::{count_self_intersections, sample_curve};
use crate::field::{Field, Ring};
use crate::moebius::MoebiusTransform;
use crate::numfield::{FieldElement, NumberField};
use crate::poly::Polynomial;
use crate::ratfn::RatFn;

type FRat = RatFn<FieldElement>;
type FPoly = Polynomial<FieldElement>;
type QPolynomial = Polynomial<BigRational>;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("ζ is not a root of unity of the required order")]
    NotRootOfUnity,
    #[error("ρ² differs from the required power of ζ")]
    BadRho,
    #[error("the coefficient field contains no square root of −1")]
    MissingI,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: String,
    pub parameters: String,
    pub f: FRat,
    pub g: FRat,
    pub identity_holds: bool,
    pub composition_real: bool,
    pub circle: Option<CircleVerdict>,
    pub self_intersections: Option<usize>,
}

/// Monic Chebyshev-like polynomial: T_n(z + 1/z) = zⁿ + 1/zⁿ, via
/// T₁ = z, T₂ = z² − 2, T_{m+1} = z·T_m − T_{m−1}. The defining identity
/// is verified symbolically before returning.
pub fn chebyshev(n: u32) -> QPolynomial {
    assert!(n >= 1);
    let one = BigRational::one();
    let z: QPolynomial = Polynomial::new(vec![BigRational::zero(), one.clone()]);
    let mut tm1: QPolynomial = Polynomial::constant(BigRational::from_integer(2.into())); // T₀
    let mut t = z.clone(); // T₁
    for _ in 1..n {
        let next = z.mul(&t).sub(&tm1);
        tm1 = t;
        t = next;
    }
    // verify T_n(z + 1/z) = zⁿ + 1/zⁿ
    let k = NumberField::rationals().unwrap();
    let tk = lift(&t, &k);
    let zr: FRat = RatFn::var(&k.one());
    let arg = zr.add(&zr.recip().unwrap());
    let lhs = RatFn::from_poly(tk).compose(&arg);
    let rhs = zr.pow(n).add(&zr.pow(n).recip().unwrap());
    assert_eq!(lhs, rhs, "Chebyshev defining identity failed");
    t
}

pub fn lift(p: &QPolynomial, k: &NumberField) -> FPoly {
    Polynomial::new(p.coeffs().iter().map(|c| k.from_rational(c.clone())).collect())
}

fn pow_element(z: &FieldElement, e: u32) -> FieldElement {
    let mut acc = z.one_like();
    for _ in 0..e {
        acc = acc.mul(z);
    }
    acc
}

/// f = T_n, g = ζz + 1/(ζz) for ζⁿ = 1; the composition collapses to
/// zⁿ + 1/zⁿ, which is real. The image circle-dichotomy (circle iff
/// ζ⁴ = 1) is recorded from circle_test.
pub fn pakovich_pair(n: u32, zeta: &FieldElement) -> Result<FamilyInstance, FamilyError> {
    assert!(n >= 1);
    let k = zeta.field().clone();
    if Ring::is_zero(zeta) || pow_element(zeta, n) != k.one() {
        return Err(FamilyError::NotRootOfUnity);
    }
    let z: FRat = RatFn::var(&k.one());
    let zc = z.mul(&RatFn::constant(zeta.clone()));
    let g = zc.add(&zc.recip().unwrap());
    let f = RatFn::from_poly(lift(&chebyshev(n), &k));
    let composed = f.compose(&g);
    let target = z.pow(n).add(&z.pow(n).recip().unwrap());
    let identity_holds = composed == target;
    let composition_real = composed.is_real();
    let circle = circle_test(&g).ok();
    Ok(FamilyInstance {
        name: "pakovich".into(),
        parameters: format!("n={n}, field={}", k.name()),
        f,
        g,
        identity_holds,
        composition_real,
        circle,
        self_intersections: None,
    })
}

fn find_i(k: &NumberField) -> Option<FieldElement> {
    let minus_one = k.from_integer(-1);
    let mut cand = k.generator();
    for _ in 0..k.degree() {
        if cand.mul(&cand) == minus_one {
            return Some(cand);
        }
        cand = cand.mul(&k.generator());
    }
    None
}

/// The twisted family F = z^k(1−z)^{n−k}, G = (1−ζz^k)/(1−ζz^n); checks
/// the conjugation identity F(Ḡ(1/z)) = ζ^{k−n}·F(G(z)) symbolically,
/// then forms f = ρ·F and g = G∘μ with μ = (z+i)/(z−i) and certifies
/// that f∘g is real.
pub fn avanzi_zannier_pair(
    n: u32,
    k_exp: u32,
    zeta: &FieldElement,
    rho: &FieldElement,
) -> Result<FamilyInstance, FamilyError> {
    assert!(k_exp >= 1 && k_exp < n);
    let k = zeta.field().clone();
    let i = find_i(&k).ok_or(FamilyError::MissingI)?;
    let zeta_inv = zeta.inv().ok_or(FamilyError::NotRootOfUnity)?;
    let zeta_km_n = pow_element(&zeta_inv, n - k_exp); // ζ^{k−n}
    if rho.mul(rho) != zeta_km_n {
        return Err(FamilyError::BadRho);
    }
    let z: FRat = RatFn::var(&k.one());
    let one: FRat = RatFn::constant(k.one());
    let big_f = z
        .pow(k_exp)
        .mul(&one.sub(&z).pow(n - k_exp));
    let zc = RatFn::constant(zeta.clone());
    let big_g = one
        .sub(&zc.mul(&z.pow(k_exp)))
        .div(&one.sub(&zc.mul(&z.pow(n))))
        .ok_or_else(|| FamilyError::HypothesisViolated("degenerate G".into()))?;
    // conjugation identity
    let inv_z = z.recip().unwrap();
    let lhs = big_f.compose(&big_g.conjugate().compose(&inv_z));
    let rhs = big_f.compose(&big_g).mul(&RatFn::constant(zeta_km_n));
    let identity_holds = lhs == rhs;
    // the real pair
    let mu = MoebiusTransform::new(k.one(), i.clone(), k.one(), i.neg())
        .map_err(|_| FamilyError::MissingI)?;
    let f = big_f.mul(&RatFn::constant(rho.clone()));
    let g = big_g.compose(&mu.to_ratfn());
    let composition_real = f.compose(&g).is_real();
    let circle = circle_test(&g).ok();
    let samples = sample_curve(&g, None, 400, 64);
    let self_intersections = Some(count_self_intersections(&samples));
    Ok(FamilyInstance {
        name: "avanzi-zannier".into(),
        parameters: format!("n={n}, k={k_exp}, field={}", k.name()),
        f,
        g,
        identity_holds,
        composition_real,
        circle,
        self_intersections,
    })
}

/// Given a nonconstant polynomial g with f∘g real, return the linear map
/// λ(z) = αz + β with λ∘g real: α = 1/lead(g) makes g monic, and the
/// conjugate of the monic part can then only differ by an
/// anti-symmetric constant, half of which symmetrizes it.
pub fn realize_polynomial_inner(
    f: &FRat,
    g: &FPoly,
) -> Result<MoebiusTransform, FamilyError> {
    let lead = g
        .leading()
        .cloned()
        .filter(|_| g.degree().map(|d| d > 0).unwrap_or(false))
        .ok_or_else(|| FamilyError::HypothesisViolated("g must be nonconstant".into()))?;
    let k = lead.field().clone();
    let g_rf = RatFn::from_poly(g.clone());
    if !f.compose(&g_rf).is_real() {
        return Err(FamilyError::HypothesisViolated("f∘g is not real".into()));
    }
    let alpha = lead.inv().ok_or(FamilyError::BadRho)?;
    let gm = g.scale(&alpha);
    let diff = gm.map(|c| c.conjugate()).sub(&gm);
    if diff.degree().map(|d| d > 0).unwrap_or(false) {
        return Err(FamilyError::HypothesisViolated(
            "conjugate of the monic part differs by a non-constant".into(),
        ));
    }
    let b = diff.coeffs().first().cloned().unwrap_or_else(|| k.zero());
    if b.conjugate() != b.neg() {
        return Err(FamilyError::HypothesisViolated(
            "constant defect is not anti-symmetric".into(),
        ));
    }
    let beta = b.mul(&k.from_rational(BigRational::new(1.into(), 2.into())));
    let lambda = MoebiusTransform::new(alpha, beta, k.zero(), k.one())
        .map_err(|_| FamilyError::HypothesisViolated("degenerate λ".into()))?;
    let realized = lambda.to_ratfn().compose(&g_rf);
    assert!(realized.is_real(), "λ∘g must be real by construction");
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn chebyshev_small_cases() {
        assert_eq!(chebyshev(1), Polynomial::new(vec![q(0), q(1)]));
        assert_eq!(chebyshev(2), Polynomial::new(vec![q(-2), q(0), q(1)]));
        assert_eq!(chebyshev(3), Polynomial::new(vec![q(0), q(-3), q(0), q(1)]));
    }

    #[test]
    fn chebyshev_semigroup() {
        // T_m ∘ T_n = T_{mn}
        for (m, n) in [(2u32, 2u32), (2, 3), (3, 2), (2, 6), (3, 4)] {
            let tm = chebyshev(m);
            let tn = chebyshev(n);
            assert_eq!(tm.compose(&tn), chebyshev(m * n));
        }
    }

    #[test]
    fn pakovich_identity_and_dichotomy() {
        let k = NumberField::gaussian().unwrap();
        // ζ = i: order 4, ζ⁴ = 1 → circle
        let inst = pakovich_pair(4, &k.generator()).unwrap();
        assert!(inst.identity_holds && inst.composition_real);
        assert!(matches!(inst.circle, Some(CircleVerdict::Circle(_))));
        // ζ = −1 → circle
        let inst2 = pakovich_pair(2, &k.from_integer(-1)).unwrap();
        assert!(inst2.identity_holds);
        assert!(matches!(inst2.circle, Some(CircleVerdict::Circle(_))));
        // ζ = ω primitive cube root: ζ⁴ ≠ 1 → not a circle
        let ke = NumberField::eisenstein().unwrap();
        let inst3 = pakovich_pair(3, &ke.generator()).unwrap();
        assert!(inst3.identity_holds && inst3.composition_real);
        assert!(matches!(inst3.circle, Some(CircleVerdict::NotCircle)));
    }

    #[test]
    fn pakovich_rejects_non_root() {
        let k = NumberField::gaussian().unwrap();
        assert!(matches!(
            pakovich_pair(3, &k.generator()),
            Err(FamilyError::NotRootOfUnity)
        ));
    }

    #[test]
    fn twisted_family_original_case() {
        // n = 2, k = 1, ζ = −1, ρ = i solves ρ² = ζ^{-1} = −1
        let k = NumberField::gaussian().unwrap();
        let inst =
            avanzi_zannier_pair(2, 1, &k.from_integer(-1), &k.generator()).unwrap();
        assert!(inst.identity_holds);
        assert!(inst.composition_real);
    }

    #[test]
    fn twisted_family_untwisted_case() {
        let k = NumberField::gaussian().unwrap();
        let inst = avanzi_zannier_pair(3, 1, &k.one(), &k.one()).unwrap();
        assert!(inst.identity_holds);
        assert!(inst.composition_real);
    }

    #[test]
    fn twisted_family_bad_rho_rejected() {
        let k = NumberField::gaussian().unwrap();
        assert!(matches!(
            avanzi_zannier_pair(2, 1, &k.from_integer(-1), &k.one()),
            Err(FamilyError::BadRho)
        ));
    }

    #[test]
    fn realize_shifts_imaginary_constant() {
        let k = NumberField::gaussian().unwrap();
        // g = z² + i, f = (z − i)²: f∘g = z⁴
        let g = Polynomial::new(vec![k.generator(), k.zero(), k.one()]);
        let f = RatFn::parse("(z-t)^2", &k, 'z').unwrap();
        let lam = realize_polynomial_inner(&f, &g).unwrap();
        let lg = lam.to_ratfn().compose(&RatFn::from_poly(g));
        assert_eq!(lg, RatFn::parse("z^2", &k, 'z').unwrap());
    }

    #[test]
    fn realize_scaled_linear_inner() {
        let k = NumberField::gaussian().unwrap();
        // g = 2z + i with f = ((z−i)/2)² so f∘g = z²
        let g = Polynomial::new(vec![k.generator(), k.from_integer(2)]);
        let f = RatFn::parse("((z-t)/2)^2", &k, 'z').unwrap();
        let lam = realize_polynomial_inner(&f, &g).unwrap();
        let lg = lam.to_ratfn().compose(&RatFn::from_poly(g));
        assert_eq!(lg, RatFn::parse("z", &k, 'z').unwrap());
    }

    #[test]
    fn realize_real_inner_is_identity_class() {
        let k = NumberField::gaussian().unwrap();
        let g = Polynomial::new(vec![k.zero(), k.zero(), k.from_integer(3)]);
        let f = RatFn::parse("z+1", &k, 'z').unwrap();
        let lam = realize_polynomial_inner(&f, &g).unwrap();
        assert!(lam.is_real());
    }
}
