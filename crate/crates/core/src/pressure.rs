//! Per-level pressure `P_n = -dE_n/dL`, reported as a 1D force
//! (energy per length).
//!
//! `pressure_exact` differentiates the closed-form spectrum and is the
//! reference. Two independent routes check it: a central difference of
//! `E_n(L)` and the expectation value of `-dV/dL` in the eigenstate
//! (Hellmann–Feynman). The latter misses the moving-wall contribution of
//! the bare box, so at `V0 = 0` it is flagged instead of compared.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::{derive_state, mu, ModelParams};
use crate::quadrature::simpson_fn;
use crate::spectrum::pt_energy;
use crate::wavefunction::{eigenfunction, WavefunctionTable};

pub const DEFAULT_REL_STEP: f64 = 1e-5;
pub const MIN_HF_GRID_POINTS: usize = 1024;
/// Largest accepted ratio of the analytic tail estimate to the integral.
pub const HF_TAIL_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PressureRecord {
    pub n: u32,
    pub pressure: f64,
    /// `(2/L) W n^2`
    pub box_part: f64,
    /// `pressure - box_part`, equal to `(2/L) mu hbar omega (n + 1/2)`.
    pub osc_part: f64,
    pub mu: f64,
}

/// `P_n = (2W/L) [(n + lambda)^2 - 2 nu (n + lambda) / (2 lambda - 1)]`,
/// which factors as `(2W/L)(n + lambda)(n + mu)`.
pub fn pressure_exact(n: u32, p: &ModelParams) -> Result<PressureRecord> {
    let s = derive_state(p)?;
    let nf = f64::from(n);
    let m = mu(s.lambda);
    let scale = 2.0 * s.w / p.width;
    let pressure = scale * (nf + s.lambda) * (nf + m);
    let box_part = scale * nf * nf;
    Ok(PressureRecord {
        n,
        pressure,
        box_part,
        osc_part: pressure - box_part,
        mu: m,
    })
}

/// `-[E_n(L(1+h)) - E_n(L(1-h))] / (2 L h)`.
pub fn pressure_fd_oracle(n: u32, p: &ModelParams, rel_step: f64) -> Result<f64> {
    p.validate()?;
    if !(rel_step > 0.0 && rel_step <= 1e-3) {
        return Err(invalid("rel_step", rel_step, "must lie in (0, 1e-3]"));
    }
    let l = p.width;
    let up = pt_energy(n, &p.with_width(l * (1.0 + rel_step)))?.energy;
    let dn = pt_energy(n, &p.with_width(l * (1.0 - rel_step)))?.energy;
    Ok(-(up - dn) / (2.0 * l * rel_step))
}

/// Result of the expectation-value route.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HfPressure {
    /// `<psi_n| -dV/dL |psi_n>`; identically zero for the bare box.
    pub value: f64,
    /// Set when `V0 = 0`: the pressure then comes from the walls, which
    /// the potential derivative does not see.
    pub wall_dominated: bool,
    /// Analytic estimate of the integral beyond the last quadrature node.
    pub tail_estimate: f64,
}

/// `<psi_n| -dV/dL |psi_n>` with `-dV/dL = (2 V0 / L) xi tan(xi) sec^2(xi)`
/// in the dimensionless coordinate.
///
/// Each half of the interval is integrated in `t = -ln(2 d / pi)`, `d` the
/// distance to the wall, which turns the `cos^(2 lambda - 3)` wall
/// behaviour into an exponential decay in `t`; `grid_points` Simpson
/// panels are used per half.
pub fn pressure_hf_oracle(n: u32, p: &ModelParams, grid_points: usize) -> Result<HfPressure> {
    if grid_points < MIN_HF_GRID_POINTS {
        return Err(invalid(
            "grid_points",
            grid_points as f64,
            "need at least 1024 grid points",
        ));
    }
    let s = derive_state(p)?;
    if p.v0 == 0.0 {
        return Ok(HfPressure {
            value: 0.0,
            wall_dominated: true,
            tail_estimate: 0.0,
        });
    }
    let table = eigenfunction(n, p, grid_points)?;
    let (left, right, tail) = half_integrals(&table, s.lambda, grid_points)?;
    let integral = left + right;
    if !(integral.is_finite() && integral > 0.0) || tail > HF_TAIL_TOLERANCE * integral {
        return Err(Error::Quadrature(format!(
            "expectation of -dV/dL: integral {integral}, tail estimate {tail}"
        )));
    }
    Ok(HfPressure {
        value: 2.0 * p.v0 / p.width * integral,
        wall_dominated: false,
        tail_estimate: tail,
    })
}

const T_MAX: f64 = 650.0;

/// `(left, right, tail)`: the two half-interval integrals of
/// `psi^2 xi tan(xi) sec^2(xi)`, each already including its tail estimate,
/// and the larger of the two tail estimates.
pub(crate) fn half_integrals(
    table: &WavefunctionTable,
    lambda: f64,
    panels: usize,
) -> Result<(f64, f64, f64)> {
    let decay = 2.0 * lambda - 2.0;
    let t_end = (40.0 / decay).min(T_MAX);
    let integrand = |t: f64, left: bool| {
        let d = FRAC_PI_2 * (-t).exp();
        let (c, sn) = d.sin_cos();
        let xi = FRAC_PI_2 - d;
        let psi = table.eval_from_wall(d, left);
        // psi^2 * xi * tan * sec^2 * (d xi / d t), tan sec^2 = sin / cos^3
        psi * psi * xi * sn / (c * c * c) * d
    };
    let mut parts = [0.0; 2];
    let mut tail = 0.0f64;
    for (slot, left) in parts.iter_mut().zip([true, false]) {
        let body = simpson_fn(|t| integrand(t, left), 0.0, t_end, panels)?;
        let t_tail = integrand(t_end, left) / decay;
        tail = tail.max(t_tail.abs());
        *slot = body + t_tail;
    }
    Ok((parts[0], parts[1], tail))
}
