//! The trigonometric confining potential `V0 tan^2(pi x / L)` together with
//! its two asymptotic forms and the limiting harmonic potential.
//!
//! * near the centre: `V0 (alpha x)^2 [1 + 2/3 (alpha x)^2 + ...]`
//! * near a wall at distance `y`: `V0 / (alpha y)^2` (leading term of `cot^2`)

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::ModelParams;

/// A sampled point of a potential curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSample {
    pub x: f64,
    pub v: f64,
}

/// Truncation order of the small-`x` expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterOrder {
    /// `V0 (alpha x)^2`
    Harmonic,
    /// `V0 (alpha x)^2 (1 + 2/3 (alpha x)^2)`
    Quartic,
}

fn open_interval(x: f64, p: &ModelParams) -> Result<()> {
    p.validate()?;
    let half = 0.5 * p.width;
    if x.is_nan() || x.abs() >= half {
        return Err(Error::OutOfDomain {
            x,
            range: format!("(-{half}, {half})"),
        });
    }
    Ok(())
}

/// Exact potential `V0 tan^2(alpha x)` on the open interval `(-L/2, L/2)`.
pub fn v_pt(x: f64, p: &ModelParams) -> Result<f64> {
    open_interval(x, p)?;
    let (s, c) = (PI * x / p.width).sin_cos();
    if c == 0.0 {
        return Err(Error::OutOfDomain {
            x,
            range: "cos(alpha x) underflows to zero".into(),
        });
    }
    let t = s / c;
    Ok(p.v0 * t * t)
}

pub fn v_center_expansion(x: f64, p: &ModelParams, order: CenterOrder) -> Result<f64> {
    open_interval(x, p)?;
    let z2 = (PI * x / p.width).powi(2);
    Ok(match order {
        CenterOrder::Harmonic => p.v0 * z2,
        CenterOrder::Quartic => p.v0 * z2 * (1.0 + 2.0 / 3.0 * z2),
    })
}

/// Leading inverse-square term near the nearer wall, `V0 / (alpha y)^2`
/// with `y = |x| - L/2`.
///
/// Only defined on the outer halves `L/4 < |x| < L/2`.
pub fn v_wall_expansion(x: f64, p: &ModelParams) -> Result<f64> {
    open_interval(x, p)?;
    let quarter = 0.25 * p.width;
    if x.is_nan() || x.abs() <= quarter {
        return Err(Error::OutOfDomain {
            x,
            range: format!("{quarter} < |x| < {}", 2.0 * quarter),
        });
    }
    let y = x.abs() - 0.5 * p.width;
    let ay = PI / p.width * y;
    Ok(p.v0 / (ay * ay))
}

/// Harmonic potential `k x^2 / 2` on the whole axis.
pub fn v_harmonic(x: f64, stiffness: f64) -> f64 {
    0.5 * stiffness * x * x
}

/// Effective spring constant `k = 2 V0 alpha^2` of the central well.
pub fn bloch_stiffness(p: &ModelParams) -> Result<f64> {
    p.validate()?;
    if p.v0 <= 0.0 {
        return Err(invalid("v0", p.v0, "stiffness needs V0 > 0"));
    }
    let alpha = PI / p.width;
    Ok(2.0 * p.v0 * alpha * alpha)
}

/// Samples `v_pt` on `points` equally spaced abscissae strictly inside the
/// walls, stopping at `(1 - inset)` of the half-width.
pub fn sample_pt(p: &ModelParams, points: usize, inset: f64) -> Result<Vec<PotentialSample>> {
    if points < 2 {
        return Err(invalid("points", points as f64, "need at least 2 samples"));
    }
    if !(inset > 0.0 && inset < 1.0) {
        return Err(invalid("inset", inset, "must lie in (0, 1)"));
    }
    let xmax = 0.5 * p.width * (1.0 - inset);
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| {
            let x = xmax * ((2 * i) as f64 - last) / last;
            v_pt(x, p).map(|v| PotentialSample { x, v })
        })
        .collect()
}
