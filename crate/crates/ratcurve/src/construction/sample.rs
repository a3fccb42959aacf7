//! Numeric sampling of the image curve g(ℝ̂): rigorous interval samples
//! along a rational sweep of ℝ̂, plus the two desk-scale diagnostics used
//! to eyeball Jordan-ness (polyline self-intersection count) and
//! non-circularity (best-fit-circle residual).

use num::{BigRational, Signed, Zero};

use crate::interval::{rat_to_f64, ComplexBox, Rat};
use crate::numfield::FieldElement;
use crate::ratfn::{ExtValue, RatFn};

type FRat = RatFn<FieldElement>;

#[derive(Debug, Clone)]
pub struct CurveSample {
    /// Sweep parameter t ∈ ℝ̂; None encodes the point at infinity.
    pub parameter: Option<Rat>,
    /// Interval enclosure of the embedded image; None marks a pole
    /// (sample skipped).
    pub image: Option<ComplexBox>,
}

/// Sample post∘g over ℝ̂ (default post = identity). The sweep runs
/// s = -1 … 1 on a uniform grid with t = s/(1-|s|), so both endpoints hit
/// ∞ and the samples traverse ℝ̂ once in circular order.
pub fn sample_curve(
    g: &FRat,
    post: Option<&FRat>,
    n: usize,
    precision: u32,
) -> Vec<CurveSample> {
    assert!(n >= 2, "need at least two samples");
    let h = match post {
        Some(p) => p.compose(g),
        None => g.clone(),
    };
    let k = h.num().leading().unwrap().field().clone();
    let one = BigRational::from_integer(1.into());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let s = BigRational::new((2 * i as i64 - (n as i64 - 1)).into(), (n as i64 - 1).into());
        let denom = &one - s.abs();
        let (parameter, arg) = if denom.is_zero() {
            (None, ExtValue::Infinity)
        } else {
            let t = &s / &denom;
            (Some(t.clone()), ExtValue::Finite(k.from_rational(t)))
        };
        let image = match h.eval_ext(&arg) {
            ExtValue::Finite(v) => v.embed(precision).ok(),
            ExtValue::Infinity => None,
        };
        out.push(CurveSample { parameter, image });
    }
    out
}

fn points_f64(samples: &[CurveSample]) -> Vec<Option<(f64, f64)>> {
    samples
        .iter()
        .map(|s| {
            s.image.as_ref().map(|b| {
                let (re, im) = b.mid();
                (rat_to_f64(&re), rat_to_f64(&im))
            })
        })
        .collect()
}

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn segments_cross(p1: (f64, f64), p2: (f64, f64), q1: (f64, f64), q2: (f64, f64)) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

/// Proper crossings among non-adjacent segments of the sampled polyline
/// (pole markers break the polyline; the closing segment is included when
/// first and last samples are present). A lower bound at this resolution.
pub fn count_self_intersections(samples: &[CurveSample]) -> usize {
    let pts = points_f64(samples);
    let mut segs: Vec<((f64, f64), (f64, f64), usize)> = Vec::new();
    for i in 0..pts.len() {
        let j = (i + 1) % pts.len();
        if let (Some(a), Some(b)) = (pts[i], pts[j]) {
            segs.push((a, b, i));
        }
    }
    let n = pts.len();
    let mut count = 0;
    for a in 0..segs.len() {
        for b in (a + 1)..segs.len() {
            let (p1, p2, i) = segs[a];
            let (q1, q2, j) = segs[b];
            // skip segments sharing a sample index (cyclically adjacent)
            let adjacent = (j + n - i) % n <= 1 || (i + n - j) % n <= 1;
            if adjacent {
                continue;
            }
            if segments_cross(p1, p2, q1, q2) {
                count += 1;
            }
        }
    }
    count
}

/// Algebraic (Kåsa) circle fit through the sample midpoints; returns the
/// maximum radial deviation divided by the fitted radius. Near 0 for a
/// genuine circle, visibly positive otherwise.
pub fn circle_fit_residual(samples: &[CurveSample]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points_f64(samples).into_iter().flatten().collect();
    if pts.len() < 3 {
        return None;
    }
    // least squares for x² + y² + D·x + E·y + F = 0
    let mut m = [[0.0f64; 3]; 3];
    let mut rhs = [0.0f64; 3];
    for &(x, y) in &pts {
        let z = x * x + y * y;
        let row = [x, y, 1.0];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] += row[r] * row[c];
            }
            rhs[r] -= z * row[r];
        }
    }
    let sol = solve3(m, rhs)?;
    let (d, e, f) = (sol[0], sol[1], sol[2]);
    let cx = -d / 2.0;
    let cy = -e / 2.0;
    let r2 = cx * cx + cy * cy - f;
    if !(r2 > 0.0) {
        return None;
    }
    let r = r2.sqrt();
    let mut worst = 0.0f64;
    for &(x, y) in &pts {
        let dist = ((x - cx).powi(2) + (y - cy).powi(2)).sqrt();
        worst = worst.max((dist - r).abs());
    }
    Some(worst / r)
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| {
            m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap()
        })?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for row in (col + 1)..3 {
            let k = m[row][col] / m[col][col];
            for c in col..3 {
                m[row][c] -= k * m[col][c];
            }
            b[row] -= k * b[col];
        }
    }
    let mut x = [0.0f64; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for c in (row + 1)..3 {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}
