//! Exact energy levels, the box and oscillator pieces they split into, and
//! the two limiting spectra.
//!
//! Levels are indexed from `n = 0`. The hard-wall box is indexed from
//! `n = 1`, so `box_energy(n + 1) == pt_energy(n).energy` when `V0 = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::{derive_state, ModelParams};
use crate::potential::bloch_stiffness;

/// One eigenstate of the confined oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub n: u32,
    pub energy: f64,
    /// `(E + V0) / W`, which should equal `(n + lambda)^2`.
    pub eps: f64,
    /// `W n^2`
    pub box_part: f64,
    /// `hbar omega (n + 1/2)` with `hbar omega = 2 W lambda`
    pub osc_part: f64,
}

/// `E_n = W (n^2 + 2 lambda n + lambda) = W [(n + lambda)^2 - nu]`.
pub fn pt_energy(n: u32, p: &ModelParams) -> Result<Level> {
    let s = derive_state(p)?;
    let nf = f64::from(n);
    let box_part = s.w * nf * nf;
    let osc_part = 2.0 * s.w * s.lambda * (nf + 0.5);
    let energy = s.w * (nf * nf + 2.0 * s.lambda * nf + s.lambda);
    Ok(Level {
        n,
        energy,
        eps: (energy + p.v0) / s.w,
        box_part,
        osc_part,
    })
}

pub fn spectrum(n_max: u32, p: &ModelParams) -> Result<Vec<Level>> {
    (0..=n_max).map(|n| pt_energy(n, p)).collect()
}

/// Hard-wall box level `W n^2`, `n >= 1`.
pub fn box_energy(n: u32, p: &ModelParams) -> Result<f64> {
    if n == 0 {
        return Err(invalid(
            "n",
            0.0,
            "box levels start at n = 1 (the confined-oscillator index starts at 0)",
        ));
    }
    let s = derive_state(p)?;
    let nf = f64::from(n);
    Ok(s.w * nf * nf)
}

/// Oscillator frequency of the finite well, `omega(L) = 2 W lambda / hbar`.
pub fn oscillator_frequency(p: &ModelParams) -> Result<f64> {
    let s = derive_state(p)?;
    Ok(2.0 * s.w * s.lambda / p.hbar)
}

/// Harmonic-limit frequency `sqrt(k / m)` with `k = 2 V0 alpha^2`.
pub fn bloch_frequency(p: &ModelParams) -> Result<f64> {
    let k = bloch_stiffness(p)?;
    Ok((k / p.mass).sqrt())
}

/// `E_{n+1} - E_n = W (2n + 1 + 2 lambda)`.
pub fn level_spacing(n: u32, p: &ModelParams) -> Result<f64> {
    let s = derive_state(p)?;
    Ok(s.w * (2.0 * f64::from(n) + 1.0 + 2.0 * s.lambda))
}

/// First-order shift from the quartic term of the centre expansion,
/// `W (n^2 + n + 1/2)`. Kept separate from `pt_energy`; it is never
/// iterated to higher order.
pub fn anharmonic_correction(n: u32, p: &ModelParams) -> Result<f64> {
    let s = derive_state(p)?;
    let nf = f64::from(n);
    Ok(s.w * (nf * nf + nf + 0.5))
}
