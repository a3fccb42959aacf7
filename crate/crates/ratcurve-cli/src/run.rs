//! Command dispatch: each handler validates its slice of the JobSpec,
//! calls into the library, and returns a results payload plus exit code
//! (0 ok, 2 undecided; hard errors bubble up as exit 1).

use serde_json::{json, Value};
use thiserror::Error;

use ratcurve::construction::catalog;
use ratcurve::construction::certify::{
    certify_injective, certify_weakly_injective, circle_test, CircleVerdict,
    InjectivityVerdict, WeakInjectivity,
};
use ratcurve::construction::sample::{
    circle_fit_residual, count_self_intersections, sample_curve,
};
use ratcurve::construction::{build_pair, Certificates};
use ratcurve::families::{avanzi_zannier_pair, pakovich_pair, FamilyInstance};
use ratcurve::field::Ring;
use ratcurve::numfield::{FieldElement, NumberField};
use ratcurve::permcheck;
use ratcurve::ratfn::RatFn;

use crate::job::{JobError, JobSpec};
use crate::plot::{emit_plot, PlotError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNDECIDED: i32 = 2;

type FRat = RatFn<FieldElement>;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Job(#[from] JobError),
    #[error(transparent)]
    Plot(#[from] PlotError),
    #[error("{0}")]
    Module(String),
}

fn module<E: std::fmt::Display>(e: E) -> RunError {
    RunError::Module(e.to_string())
}

fn parse_field(name: &str) -> Result<NumberField, RunError> {
    match name {
        "rationals" => NumberField::rationals().map_err(module),
        "gaussian" => NumberField::gaussian().map_err(module),
        "eisenstein" => NumberField::eisenstein().map_err(module),
        _ => match name.strip_prefix("cyclotomic:").and_then(|n| n.parse().ok()) {
            Some(n) => NumberField::cyclotomic(n).map_err(module),
            None => Err(RunError::Job(JobError::BadValue("field", name.to_string()))),
        },
    }
}

fn parse_g(job: &JobSpec) -> Result<FRat, RunError> {
    let field = parse_field(job.require(&job.field, "field")?)?;
    RatFn::parse(job.require(&job.g, "g")?, &field, 'z').map_err(module)
}

fn circle_value(v: &CircleVerdict) -> Value {
    match v {
        CircleVerdict::Circle(mu) => {
            json!({"verdict": "circle", "moebius": mu.to_ratfn().to_string()})
        }
        CircleVerdict::NotCircle => json!({"verdict": "not-circle"}),
    }
}

/// Second component: true when the verdict leaves the claim undecided.
fn injectivity_value(v: &InjectivityVerdict) -> (Value, bool) {
    match v {
        InjectivityVerdict::Injective => (json!({"verdict": "injective"}), false),
        InjectivityVerdict::NotInjective(w) => (
            json!({
                "verdict": "not-injective",
                "witness": {"a": w.a.describe(), "b": w.b.describe()},
            }),
            false,
        ),
        InjectivityVerdict::Undecided(reason) => {
            (json!({"verdict": "undecided", "reason": reason}), true)
        }
    }
}

fn certificates_value(c: &Certificates) -> (Value, bool) {
    let (inj, undecided) = injectivity_value(&c.injectivity);
    (
        json!({
            "real": c.real,
            "injectivity": inj,
            "circle": circle_value(&c.circle),
        }),
        undecided,
    )
}

pub fn run(job: &JobSpec) -> Result<(Value, i32), RunError> {
    match job.command.as_str() {
        "construct" => cmd_construct(job),
        "verify" => cmd_verify(job),
        "circle" => cmd_circle(job),
        "injective" => cmd_injective(job),
        "weak-injective" => cmd_weak_injective(job),
        "group-search" => cmd_group_search(job),
        "family" => cmd_family(job),
        "plot" => cmd_plot(job),
        other => Err(RunError::Job(JobError::BadValue("command", other.to_string()))),
    }
}

fn cmd_construct(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let name = job.require(&job.curve, "curve")?;
    let entry = catalog::entry(name).map_err(module)?;
    let pair = build_pair(&entry.curve, &entry.c, &entry.w, entry.ell).map_err(module)?;
    let (certs, undecided) = certificates_value(&pair.certificates);
    let results = json!({
        "curve": entry.name,
        "ell": pair.ell,
        "field": pair.g.num().leading().map(|c| c.field().name().to_string()),
        "f": pair.f.to_string(),
        "g": pair.g.to_string(),
        "h": pair.h.to_string(),
        "deg_f": pair.f.degree(),
        "deg_g": pair.g.degree(),
        "deg_h": pair.h.degree(),
        "certificates": certs,
    });
    Ok((results, if undecided { EXIT_UNDECIDED } else { EXIT_OK }))
}

fn cmd_verify(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let (f, g) = if let Some(name) = &job.curve {
        let entry = catalog::entry(name).map_err(module)?;
        let pair =
            build_pair(&entry.curve, &entry.c, &entry.w, entry.ell).map_err(module)?;
        (pair.f, pair.g)
    } else {
        let field = parse_field(job.require(&job.field, "field")?)?;
        (
            RatFn::parse(job.require(&job.f, "f")?, &field, 'z').map_err(module)?,
            RatFn::parse(job.require(&job.g, "g")?, &field, 'z').map_err(module)?,
        )
    };
    let h = f.compose(&g);
    let certs = Certificates {
        real: h.is_real(),
        injectivity: certify_injective(&g).map_err(module)?,
        circle: circle_test(&g).map_err(module)?,
    };
    let (certs_value, undecided) = certificates_value(&certs);
    let results = json!({
        "h": h.to_string(),
        "deg_h": h.degree(),
        "certificates": certs_value,
    });
    Ok((results, if undecided { EXIT_UNDECIDED } else { EXIT_OK }))
}

fn cmd_circle(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let g = parse_g(job)?;
    let verdict = circle_test(&g).map_err(module)?;
    Ok((json!({"circle": circle_value(&verdict)}), EXIT_OK))
}

fn cmd_injective(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let g = parse_g(job)?;
    let (value, undecided) = injectivity_value(&certify_injective(&g).map_err(module)?);
    Ok((
        json!({"injectivity": value}),
        if undecided { EXIT_UNDECIDED } else { EXIT_OK },
    ))
}

fn cmd_weak_injective(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let g = parse_g(job)?;
    match certify_weakly_injective(&g).map_err(module)? {
        WeakInjectivity::WeaklyInjective { z0 } => Ok((
            json!({"weak_injectivity": {"verdict": "weakly-injective", "z0": z0.to_string()}}),
            EXIT_OK,
        )),
        WeakInjectivity::NoWitnessFound { candidates_tried } => Ok((
            json!({"weak_injectivity": {
                "verdict": "no-witness-found",
                "candidates_tried": candidates_tried,
            }}),
            EXIT_UNDECIDED,
        )),
    }
}

fn cmd_group_search(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let order_cap = job.order_cap.unwrap_or(permcheck::DEFAULT_CAP);
    if let Some(name) = &job.group {
        let gens = permcheck::catalog_group(name)
            .ok_or_else(|| JobError::BadValue("group", name.clone()))?;
        let group = permcheck::closure(&gens, order_cap).map_err(module)?;
        let mut sigmas = Vec::new();
        let mut ok = true;
        for sigma in permcheck::admissible_involutions(&group).map_err(module)? {
            let report = permcheck::verify_proposition(&group, &sigma).map_err(module)?;
            ok &= report.ok;
            sigmas.push(json!({
                "sigma": sigma.cycle_string(),
                "ok": report.ok,
                "intermediates": report.intermediates,
            }));
        }
        let results = json!({
            "group": name,
            "degree": group.degree(),
            "order": group.order(),
            "ok": ok,
            "sigmas": sigmas,
        });
        return if ok {
            Ok((results, EXIT_OK))
        } else {
            Err(RunError::Module(format!("proposition fails on {name}")))
        };
    }
    let report = permcheck::search(
        job.max_degree.unwrap_or(9),
        job.group_budget.unwrap_or(50),
        order_cap,
        job.seed.unwrap_or(0),
    );
    let violations = report.violations;
    let results = serde_json::to_value(&report).map_err(module)?;
    if violations > 0 {
        return Err(RunError::Module(format!("{violations} proposition violations")));
    }
    Ok((results, EXIT_OK))
}

fn pow(z: &FieldElement, n: u32) -> FieldElement {
    let mut acc = z.field().one();
    for _ in 0..n {
        acc = acc.mul(z);
    }
    acc
}

fn family_params(spec: &str) -> (String, std::collections::BTreeMap<String, u32>) {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut params = std::collections::BTreeMap::new();
    for part in rest.split(',').filter(|p| !p.is_empty()) {
        if let Some((k, v)) = part.split_once('=') {
            if let Ok(v) = v.parse() {
                params.insert(k.trim().to_string(), v);
            }
        }
    }
    (name.to_string(), params)
}

fn pakovich_instance(n: u32, order: u32) -> Result<FamilyInstance, RunError> {
    let (field, zeta) = match order {
        1 => (NumberField::rationals().map_err(module)?, None),
        2 => (NumberField::rationals().map_err(module)?, Some(-1)),
        3 => (NumberField::eisenstein().map_err(module)?, None),
        4 => (NumberField::gaussian().map_err(module)?, None),
        6 => (NumberField::eisenstein().map_err(module)?, Some(6)),
        m => (NumberField::cyclotomic(m).map_err(module)?, None),
    };
    let zeta = match zeta {
        Some(-1) => field.from_integer(-1),
        Some(6) => field.generator().neg(), // −ω has order 6
        _ if order == 1 => field.one(),
        _ => field.generator(),
    };
    pakovich_pair(n, &zeta).map_err(module)
}

fn avanzi_zannier_instance(n: u32, k: u32, order: u32) -> Result<FamilyInstance, RunError> {
    match order {
        1 => {
            let field = NumberField::gaussian().map_err(module)?;
            avanzi_zannier_pair(n, k, &field.one(), &field.one()).map_err(module)
        }
        2 => {
            let field = NumberField::gaussian().map_err(module)?;
            let rho = if (n - k) % 2 == 0 { field.one() } else { field.generator() };
            avanzi_zannier_pair(n, k, &field.from_integer(-1), &rho).map_err(module)
        }
        4 => {
            // ζ = i and ρ = ζ₈^m with 2m ≡ k−n (mod 8) both live in the
            // eighth cyclotomic field
            let field = NumberField::cyclotomic(8).map_err(module)?;
            let zeta = pow(&field.generator(), 2);
            let m = (k as i64 - n as i64).rem_euclid(4) as u32;
            let rho = pow(&field.generator(), m);
            avanzi_zannier_pair(n, k, &zeta, &rho).map_err(module)
        }
        other => Err(RunError::Job(JobError::BadValue(
            "zeta_order",
            other.to_string(),
        ))),
    }
}

pub fn family_instance(spec: &str) -> Result<FamilyInstance, RunError> {
    let (name, params) = family_params(spec);
    let get = |k: &str| params.get(k).copied();
    match name.as_str() {
        "pakovich" => {
            let order = get("zeta_order").unwrap_or(1);
            pakovich_instance(get("n").unwrap_or(order.max(1)), order)
        }
        "avanzi-zannier" => {
            let n = get("n")
                .ok_or(JobError::MissingInput("n", "family".to_string()))?;
            let k = get("k")
                .ok_or(JobError::MissingInput("k", "family".to_string()))?;
            avanzi_zannier_instance(n, k, get("zeta_order").unwrap_or(1))
        }
        other => Err(RunError::Job(JobError::BadValue("family", other.to_string()))),
    }
}

fn cmd_family(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let spec = job.require(&job.family, "family")?;
    let inst = family_instance(spec)?;
    if !inst.identity_holds || !inst.composition_real {
        return Err(RunError::Module(format!(
            "family instance {spec:?} failed its defining identity"
        )));
    }
    let results = json!({
        "name": inst.name,
        "parameters": inst.parameters,
        "f": inst.f.to_string(),
        "g": inst.g.to_string(),
        "identity_holds": inst.identity_holds,
        "composition_real": inst.composition_real,
        "circle": inst.circle.as_ref().map(circle_value),
        "self_intersections": inst.self_intersections,
    });
    Ok((results, EXIT_OK))
}

fn cmd_plot(job: &JobSpec) -> Result<(Value, i32), RunError> {
    let field = parse_field(job.require(&job.field, "field")?)?;
    let g = RatFn::parse(job.require(&job.g, "g")?, &field, 'z').map_err(module)?;
    let post = match &job.post {
        Some(expr) => Some(RatFn::parse(expr, &field, 'z').map_err(module)?),
        None => None,
    };
    let n = job.samples.unwrap_or(2000).max(2);
    let samples = sample_curve(&g, post.as_ref(), n, job.precision_bits());
    let svg_path = job.require(&job.plot_out, "plot_out")?.clone();
    let csv_path = emit_plot(&samples, &svg_path)?;
    let skipped = samples.iter().filter(|s| s.image.is_none()).count();
    let results = json!({
        "samples": n,
        "skipped": skipped,
        "self_intersections": count_self_intersections(&samples),
        "circle_residual": circle_fit_residual(&samples)
            .and_then(|r| serde_json::Number::from_f64((r * 1e12).round() / 1e12)),
        "svg": svg_path.display().to_string(),
        "csv": csv_path.display().to_string(),
    });
    Ok((results, EXIT_OK))
}
