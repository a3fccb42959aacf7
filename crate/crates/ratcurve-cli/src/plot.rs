//! SVG/CSV emission for sampled curves: one path element whose subpaths
//! break at pole markers, plus a CSV sidecar with the raw samples.

use std::path::{Path, PathBuf};

use num::ToPrimitive;
use ratcurve::construction::sample::CurveSample;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("plot i/o failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("need at least two non-skipped samples, got {0}")]
    TooFewSamples(usize),
}

fn point(sample: &CurveSample) -> Option<(f64, f64)> {
    let boxed = sample.image.as_ref()?;
    let (re, im) = boxed.mid();
    Some((re.to_f64()?, im.to_f64()?))
}

pub fn csv_sidecar(svg_path: &Path) -> PathBuf {
    svg_path.with_extension("csv")
}

/// Write a standalone SVG (single path, 5% viewBox margin) and the CSV
/// sidecar (`param,re,im,skipped`). Returns the sidecar path.
pub fn emit_plot(samples: &[CurveSample], path: &Path) -> Result<PathBuf, PlotError> {
    let pts: Vec<Option<(f64, f64)>> = samples.iter().map(point).collect();
    let live: Vec<(f64, f64)> = pts.iter().flatten().copied().collect();
    if live.len() < 2 {
        return Err(PlotError::TooFewSamples(live.len()));
    }

    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &live {
        x0 = x0.min(x);
        x1 = x1.max(x);
        // SVG's y axis points down; flip so the plot reads mathematically
        y0 = y0.min(-y);
        y1 = y1.max(-y);
    }
    let pad = |lo: f64, hi: f64| {
        let span = if hi > lo { hi - lo } else { 1.0 };
        (lo - 0.05 * span, hi + 0.05 * span)
    };
    let (x0, x1) = pad(x0, x1);
    let (y0, y1) = pad(y0, y1);

    let mut d = String::new();
    let mut pen_down = false;
    for p in &pts {
        match p {
            Some((x, y)) => {
                let op = if pen_down { 'L' } else { 'M' };
                d.push_str(&format!("{op} {x:.6},{:.6} ", -y));
                pen_down = true;
            }
            None => pen_down = false,
        }
    }

    let svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0:.6} {y0:.6} {w:.6} {h:.6}\">\n\
         <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{sw:.6}\"/>\n\
         </svg>\n",
        w = x1 - x0,
        h = y1 - y0,
        d = d.trim_end(),
        sw = (x1 - x0).max(y1 - y0) / 400.0,
    );
    std::fs::write(path, svg)?;

    let mut csv = String::from("param,re,im,skipped\n");
    for sample in samples {
        let param = sample
            .parameter
            .as_ref()
            .map(|r| r.to_string())
            .unwrap_or_else(|| "inf".into());
        match point(sample) {
            Some((x, y)) => csv.push_str(&format!("{param},{x:.12},{y:.12},false\n")),
            None => csv.push_str(&format!("{param},,,true\n")),
        }
    }
    let sidecar = csv_sidecar(path);
    std::fs::write(&sidecar, csv)?;
    Ok(sidecar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use ratcurve::interval::{ComplexBox, Interval};

    fn sample(x: i64, y: i64) -> CurveSample {
        let q = |v: i64| BigRational::from_integer(v.into());
        CurveSample {
            parameter: Some(q(x)),
            image: Some(ComplexBox::new(
                Interval::new(q(x), q(x)),
                Interval::new(q(y), q(y)),
            )),
        }
    }

    fn pole() -> CurveSample {
        CurveSample { parameter: None, image: None }
    }

    #[test]
    fn two_point_path() {
        let dir = std::env::temp_dir().join("ratcurve-plot-test");
        std::fs::create_dir_all(&dir).unwrap();
        let svg = dir.join("two.svg");
        emit_plot(&[sample(0, 0), sample(1, 1)], &svg).unwrap();
        let text = std::fs::read_to_string(&svg).unwrap();
        assert_eq!(text.matches("M ").count(), 1);
        assert_eq!(text.matches("L ").count(), 1);
        let csv = std::fs::read_to_string(csv_sidecar(&svg)).unwrap();
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn pole_splits_path() {
        let dir = std::env::temp_dir().join("ratcurve-plot-test");
        std::fs::create_dir_all(&dir).unwrap();
        let svg = dir.join("split.svg");
        emit_plot(
            &[sample(0, 0), sample(1, 1), pole(), sample(2, 0), sample(3, 1)],
            &svg,
        )
        .unwrap();
        let text = std::fs::read_to_string(&svg).unwrap();
        assert_eq!(text.matches("M ").count(), 2);
        let csv = std::fs::read_to_string(csv_sidecar(&svg)).unwrap();
        assert!(csv.contains("inf,,,true"));
    }

    #[test]
    fn rejects_single_live_sample() {
        let svg = std::env::temp_dir().join("ratcurve-plot-reject.svg");
        assert!(matches!(
            emit_plot(&[sample(0, 0), pole()], &svg),
            Err(PlotError::TooFewSamples(1))
        ));
    }
}
