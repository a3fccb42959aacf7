//! End-to-end acceptance checks. Each numbered criterion prints a single
//! PASS/FAIL line; the test fails if any criterion fails.

use num::BigRational;

use ratcurve::construction::catalog;
use ratcurve::construction::certify::{
    certify_injective, certify_weakly_injective, circle_test, CircleVerdict,
    InjectivityVerdict, WeakInjectivity,
};
use ratcurve::construction::sample::{
    circle_fit_residual, count_self_intersections, sample_curve,
};
use ratcurve::construction::{build_pair, find_normalization, ConstructionPair};
use ratcurve::elliptic::{
    dual_isogeny, ec_mul, halving_obstruction, mult_by_ell_xmap,
    torsion_conjugate_check, velu, EllipticCurve,
};
use ratcurve::families::{avanzi_zannier_pair, chebyshev, pakovich_pair};
use ratcurve::field::Ring;
use ratcurve::numfield::{FieldElement, NumberField};
use ratcurve::ratfn::RatFn;
use ratcurve::sturm;
use ratcurve::Polynomial;

type FRat = RatFn<FieldElement>;

fn check(results: &mut Vec<(usize, &'static str, Result<(), String>)>, n: usize,
         what: &'static str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("[PASS] criterion {n}: {what}"),
        Err(e) => println!("[FAIL] criterion {n}: {what}: {e}"),
    }
    results.push((n, what, outcome));
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.to_string()) }
}

fn printed_pair(k: &NumberField) -> (FRat, FRat) {
    let f = RatFn::parse("(z^3-6*(t+1)*z)/(3*z^2+1)", k, 'z').unwrap();
    let g = RatFn::parse("(2*z^3+(t+1)*z)/(z^2-t)", k, 'z').unwrap();
    (f, g)
}

fn criterion1() -> Result<(), String> {
    let k = NumberField::eisenstein().map_err(|e| e.to_string())?;
    let (f, g) = printed_pair(&k);
    let h = f.compose(&g);
    let expected = RatFn::parse(
        "(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)",
        &k,
        'z',
    )
    .map_err(|e| e.to_string())?;
    ensure(h == expected, "composition differs from the printed form")
}

fn criterion2(pair: &ConstructionPair) -> Result<(), String> {
    ensure(pair.h.degree() == 9, "deg h ≠ 9")?;
    ensure(pair.h.is_real(), "h is not real")?;
    ensure(
        matches!(pair.certificates.injectivity, InjectivityVerdict::Injective),
        "g not certified injective",
    )?;
    ensure(
        matches!(pair.certificates.circle, CircleVerdict::NotCircle),
        "g not certified non-circle",
    )?;
    let k = NumberField::eisenstein().map_err(|e| e.to_string())?;
    let (f, g) = printed_pair(&k);
    let found = find_normalization(pair, &f, &g, 12);
    ensure(
        found.is_some(),
        "no real Möbius normalization onto the printed pair within height 12",
    )
}

fn criterion3(entry: &catalog::CatalogEntry) -> Result<(), String> {
    ensure(ec_mul(3, &entry.c).is_infinity(), "c does not have order dividing 3")?;
    ensure(
        torsion_conjugate_check(&entry.curve, &entry.c, 3),
        "⟨c⟩ meets its conjugate",
    )?;
    let phi = velu(&entry.curve, &entry.c, 3).map_err(|e| e.to_string())?;
    let k = entry.curve.field();
    let target = EllipticCurve::new(
        k.parse_element("298080*t+537165").map_err(|e| e.to_string())?,
        k.parse_element("86819040*t-39204594").map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    ensure(
        phi.codomain.j_invariant() == target.j_invariant(),
        "codomain j-invariant differs from the printed quotient curve",
    )
}

fn criterion4(entry: &catalog::CatalogEntry) -> Result<(), String> {
    ensure(
        halving_obstruction(&entry.curve, &entry.w).map_err(|e| e.to_string())?,
        "w reported as halvable over ℝ",
    )?;
    // halving locus for w = (−78, 0): numerator of d(X) − w_x
    let q = |v: i64| BigRational::from_integer(v.into());
    let (a, b, wx) = (q(-46035), q(-3116178), q(-78));
    let quartic: sturm::QPolynomial = Polynomial::new(vec![
        &a * &a - q(4) * &b * &wx,
        -(q(8) * &b + q(4) * &a * &wx),
        q(-2) * &a,
        q(-4) * &wx,
        q(1),
    ]);
    let factor: sturm::QPolynomial = Polynomial::new(vec![q(33867), q(156), q(1)]);
    let (quot, rem) = quartic.divmod(&factor);
    ensure(rem.is_zero(), "X² + 156X + 33867 does not divide the halving locus")?;
    ensure(quot.degree() == Some(2), "unexpected cofactor degree")?;
    ensure(
        sturm::count_real_roots(&factor).map_err(|e| e.to_string())? == 0,
        "the quadratic factor has real roots",
    )
}

fn criterion5(entry: &catalog::CatalogEntry) -> Result<(), String> {
    let phi = velu(&entry.curve, &entry.c, 3).map_err(|e| e.to_string())?;
    let dual = dual_isogeny(&phi, 3).map_err(|e| e.to_string())?;
    let composed = dual.xmap.compose(&phi.xmap);
    ensure(
        composed == mult_by_ell_xmap(&entry.curve, 3),
        "Φ′∘Φ is not the x-map of [3]",
    )
}

fn criterion6() -> Result<(), String> {
    let entry = catalog::entry("gauss5").map_err(|e| e.to_string())?;
    let pair =
        build_pair(&entry.curve, &entry.c, &entry.w, 5).map_err(|e| e.to_string())?;
    ensure(pair.f.degree() == 5 && pair.g.degree() == 5, "degrees differ from 5")?;
    ensure(pair.certificates.real, "f∘g is not real")?;
    ensure(
        matches!(pair.certificates.circle, CircleVerdict::NotCircle),
        "g not certified non-circle",
    )?;
    match &pair.certificates.injectivity {
        InjectivityVerdict::Injective => Ok(()),
        InjectivityVerdict::NotInjective(w) => {
            Err(format!("collision at ({}, {})", w.a.describe(), w.b.describe()))
        }
        InjectivityVerdict::Undecided(reason) => Err(format!("undecided: {reason}")),
    }
}

fn criterion7() -> Result<(), String> {
    let report = ratcurve::permcheck::search(9, 50, ratcurve::permcheck::DEFAULT_CAP, 7);
    ensure(report.violations == 0, "proposition violations found")?;
    ensure(report.pairs_checked >= 300, "fewer than 300 (G, σ) pairs")?;
    ensure(report.triples_checked >= 1000, "fewer than 1000 (G, σ, M) triples")?;
    for d in [3usize, 5, 7, 9] {
        let n = report.random_groups_per_degree.get(&d).copied().unwrap_or(0);
        ensure(n >= 50, &format!("only {n} random groups at degree {d}"))?;
    }
    Ok(())
}

fn az_instance(n: u32, k_exp: u32, zeta_kind: i32) -> Result<(), String> {
    let inst = match zeta_kind {
        // ζ = 1 and ζ = −1 live in the Gaussian field (which supplies i)
        1 => {
            let k = NumberField::gaussian().map_err(|e| e.to_string())?;
            avanzi_zannier_pair(n, k_exp, &k.one(), &k.one())
        }
        -1 => {
            let k = NumberField::gaussian().map_err(|e| e.to_string())?;
            let rho = if (n - k_exp) % 2 == 0 { k.one() } else { k.generator() };
            avanzi_zannier_pair(n, k_exp, &k.from_integer(-1), &rho)
        }
        // ζ = i needs an eighth root of unity for ρ
        _ => {
            let k = NumberField::cyclotomic(8).map_err(|e| e.to_string())?;
            let i = k.generator().mul(&k.generator());
            let m = (k_exp as i64 - n as i64).rem_euclid(4) as u32;
            let mut rho = k.one();
            for _ in 0..m {
                rho = rho.mul(&k.generator());
            }
            avanzi_zannier_pair(n, k_exp, &i, &rho)
        }
    }
    .map_err(|e| e.to_string())?;
    ensure(
        inst.identity_holds,
        &format!("conjugation identity fails at n={n}, k={k_exp}, ζ kind {zeta_kind}"),
    )?;
    ensure(
        inst.composition_real,
        &format!("f∘g not real at n={n}, k={k_exp}, ζ kind {zeta_kind}"),
    )
}

fn criterion8() -> Result<(), String> {
    // defining identity is asserted inside chebyshev() for every n
    for n in 1..=12 {
        let _ = chebyshev(n);
    }
    for (m, n) in [(2u32, 2u32), (2, 3), (3, 2), (2, 4), (4, 2), (2, 5), (5, 2),
                   (3, 3), (2, 6), (6, 2), (3, 4), (4, 3)] {
        ensure(
            chebyshev(m).compose(&chebyshev(n)) == chebyshev(m * n),
            &format!("semigroup identity fails at ({m}, {n})"),
        )?;
    }
    let k = NumberField::rationals().map_err(|e| e.to_string())?;
    for n in 2..=6 {
        let inst = pakovich_pair(n, &k.one()).map_err(|e| e.to_string())?;
        ensure(
            inst.identity_holds && inst.composition_real,
            &format!("T_n(g) identity fails at n={n}"),
        )?;
    }
    for (n, kk) in [(2u32, 1u32), (3, 1), (3, 2), (4, 1)] {
        for zeta_kind in [1, -1, 0] {
            az_instance(n, kk, zeta_kind)?;
        }
    }
    Ok(())
}

fn criterion9() -> Result<(), String> {
    for order in [1u32, 2, 3, 4, 5, 6, 8] {
        let (k, zeta) = match order {
            1 => (NumberField::rationals().map_err(|e| e.to_string())?, None),
            2 => (NumberField::rationals().map_err(|e| e.to_string())?, Some(-1)),
            3 => (NumberField::eisenstein().map_err(|e| e.to_string())?, None),
            4 => (NumberField::gaussian().map_err(|e| e.to_string())?, None),
            6 => (NumberField::eisenstein().map_err(|e| e.to_string())?, Some(6)),
            m => (NumberField::cyclotomic(m).map_err(|e| e.to_string())?, None),
        };
        let zeta = match zeta {
            Some(-1) => k.from_integer(-1),
            Some(6) => k.generator().neg(),
            _ if order == 1 => k.one(),
            _ => k.generator(),
        };
        let z: FRat = RatFn::var(&k.one());
        let zc = z.mul(&RatFn::constant(zeta));
        let g = zc.add(&zc.recip().unwrap());
        let verdict = circle_test(&g).map_err(|e| e.to_string())?;
        let expect_circle = order == 1 || order == 2 || order == 4;
        let got_circle = matches!(verdict, CircleVerdict::Circle(_));
        ensure(
            got_circle == expect_circle,
            &format!("dichotomy fails at ζ order {order}"),
        )?;
    }
    Ok(())
}

fn criterion10() -> Result<(), String> {
    let k = NumberField::rationals().map_err(|e| e.to_string())?;
    let h = RatFn::parse(
        "(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)",
        &k,
        'z',
    )
    .map_err(|e| e.to_string())?;
    ensure(
        matches!(
            certify_weakly_injective(&h).map_err(|e| e.to_string())?,
            WeakInjectivity::NoWitnessFound { .. }
        ),
        "degree-9 composition unexpectedly yields a witness",
    )?;
    let cube = RatFn::parse("z^3", &k, 'z').map_err(|e| e.to_string())?;
    ensure(
        matches!(
            certify_weakly_injective(&cube).map_err(|e| e.to_string())?,
            WeakInjectivity::WeaklyInjective { .. }
        ),
        "z³ not certified weakly injective",
    )
}

fn criterion11() -> Result<(), String> {
    let k = NumberField::eisenstein().map_err(|e| e.to_string())?;
    let (_, g) = printed_pair(&k);
    let post = RatFn::parse("1/(1+z)", &k, 'z').map_err(|e| e.to_string())?;
    let samples = sample_curve(&g, Some(&post), 2000, 128);
    ensure(
        count_self_intersections(&samples) == 0,
        "sampled polyline self-intersects",
    )?;
    let residual = circle_fit_residual(&samples).ok_or("too few points for a fit")?;
    ensure(
        residual > 0.05,
        &format!("circle-fit residual {residual} does not exceed 0.05"),
    )
}

#[test]
fn acceptance() {
    let mut results = Vec::new();

    check(&mut results, 1, "printed composition reproduced exactly", criterion1());

    let entry = catalog::entry("14a2").expect("catalog entry");
    let pair = build_pair(&entry.curve, &entry.c, &entry.w, 3).expect("degree-3 build");
    check(&mut results, 2, "degree-3 pipeline with normalization", criterion2(&pair));
    check(&mut results, 3, "torsion, kernel, and quotient-curve facts", criterion3(&entry));
    check(&mut results, 4, "halving obstruction with explicit quadratic factor", criterion4(&entry));
    check(&mut results, 5, "dual isogeny composes to multiplication by 3", criterion5(&entry));
    check(&mut results, 6, "degree-5 pipeline fully certified", criterion6());
    check(&mut results, 7, "group proposition sweep over degrees 3,5,7,9", criterion7());
    check(&mut results, 8, "classical family identities", criterion8());
    check(&mut results, 9, "circle dichotomy over root-of-unity twists", criterion9());
    check(&mut results, 10, "weak-injectivity consistency", criterion10());
    check(&mut results, 11, "figure reproduction at 2000 samples", criterion11());

    let failures: Vec<String> = results
        .iter()
        .filter_map(|(n, what, r)| {
            r.as_ref().err().map(|e| format!("criterion {n} ({what}): {e}"))
        })
        .collect();
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}

#[test]
fn printed_inner_function_is_injective() {
    let k = NumberField::eisenstein().unwrap();
    let (_, g) = printed_pair(&k);
    assert!(matches!(
        certify_injective(&g).unwrap(),
        InjectivityVerdict::Injective
    ));
}
