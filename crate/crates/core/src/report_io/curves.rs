use std::fmt::Write as _;

use crate::distortion::{make_weights, DistortionSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    /// (x, Q(x)) on a uniform grid over [0, 1].
    DistortionCurve,
    /// (rank j, w_j) for j = 1..m.
    WeightBars,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSample {
    pub kind: CurveKind,
    pub points: Vec<(f64, f64)>,
}

/// Samples Q at `grid + 1` uniform points and the `ranks` rank weights.
pub fn emit_curves(spec: &DistortionSpec, ranks: usize, grid: usize) -> Result<(CurveSample, CurveSample)> {
    if grid < 2 {
        return Err(Error::Domain {
            function: "emit_curves",
            value: grid as f64,
            domain: "grid >= 2",
        });
    }
    let points = (0..=grid)
        .map(|i| {
            let x = if i == grid { 1.0 } else { i as f64 / grid as f64 };
            Ok((x, spec.evaluate(x)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let weights = make_weights(spec, ranks)?;
    let bars = weights
        .iter()
        .enumerate()
        .map(|(j, &w)| ((j + 1) as f64, w))
        .collect();
    Ok((
        CurveSample {
            kind: CurveKind::DistortionCurve,
            points,
        },
        CurveSample {
            kind: CurveKind::WeightBars,
            points: bars,
        },
    ))
}

/// `series,x,y` rows for both samples.
pub fn curves_csv(samples: &[CurveSample]) -> String {
    let mut out = String::from("series,x,y\n");
    for sample in samples {
        let series = match sample.kind {
            CurveKind::DistortionCurve => "distortion",
            CurveKind::WeightBars => "weight",
        };
        for (x, y) in &sample.points {
            let _ = writeln!(out, "{series},{x},{y}");
        }
    }
    out
}
