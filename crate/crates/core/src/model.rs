//! Physical parameters and their reduction to dimensionless form.
//!
//! Everything downstream works with four derived quantities of the
//! confinement width `L`:
//!
//! ```text
//! alpha = pi / L
//! W     = hbar^2 alpha^2 / (2 m)        (box ground-state energy)
//! nu    = V0 / W                        (dimensionless strength)
//! lambda(lambda - 1) = nu,  lambda >= 1 (wavefunction exponent)
//! ```
//!
//! Units are whatever the caller picks, as long as they are consistent.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Inputs of the model: particle mass, potential amplitude, confinement
/// width and the action constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub mass: f64,
    pub v0: f64,
    pub width: f64,
    pub hbar: f64,
}

impl Default for ModelParams {
    /// `hbar = m = 1`, `L = pi` (so `alpha = 1`, `W = 1/2`) and `V0 = 1`.
    fn default() -> Self {
        Self {
            mass: 1.0,
            v0: 1.0,
            width: PI,
            hbar: 1.0,
        }
    }
}

impl ModelParams {
    pub fn new(mass: f64, v0: f64, width: f64, hbar: f64) -> Result<Self> {
        let p = Self {
            mass,
            v0,
            width,
            hbar,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(invalid("mass", self.mass, "must be finite and > 0"));
        }
        if !(self.v0.is_finite() && self.v0 >= 0.0) {
            return Err(invalid("v0", self.v0, "must be finite and >= 0"));
        }
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(invalid("width", self.width, "must be finite and > 0"));
        }
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(invalid("hbar", self.hbar, "must be finite and > 0"));
        }
        Ok(())
    }

    pub fn with_v0(self, v0: f64) -> Self {
        Self { v0, ..self }
    }

    pub fn with_width(self, width: f64) -> Self {
        Self { width, ..self }
    }

    /// Picks `V0` so that the dimensionless strength equals `nu`.
    pub fn with_nu(self, nu: f64) -> Self {
        let w = box_ground_energy(&self);
        Self { v0: nu * w, ..self }
    }
}

/// Derived quantities of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessState {
    pub alpha: f64,
    pub w: f64,
    pub nu: f64,
    pub lambda: f64,
    /// `lambda - 1`, evaluated without cancellation for small `nu`.
    pub lambda_excess: f64,
}

pub(crate) fn box_ground_energy(p: &ModelParams) -> f64 {
    let alpha = PI / p.width;
    p.hbar * p.hbar * alpha * alpha / (2.0 * p.mass)
}

/// Positive root of `lambda (lambda - 1) = nu`.
pub fn lambda_from_nu(nu: f64) -> f64 {
    0.5 * (1.0 + (1.0 + 4.0 * nu).sqrt())
}

/// `lambda - 1 = 2 nu / (1 + sqrt(1 + 4 nu))`; same root, no cancellation.
pub fn lambda_excess_from_nu(nu: f64) -> f64 {
    2.0 * nu / (1.0 + (1.0 + 4.0 * nu).sqrt())
}

/// Inhomogeneity factor `lambda / (2 lambda - 1)`, which lies in `(1/2, 1]`.
pub fn mu(lambda: f64) -> f64 {
    lambda / (2.0 * lambda - 1.0)
}

pub fn derive_state(p: &ModelParams) -> Result<DimensionlessState> {
    p.validate()?;
    let alpha = PI / p.width;
    let w = p.hbar * p.hbar * alpha * alpha / (2.0 * p.mass);
    let nu = p.v0 / w;
    if !nu.is_finite() {
        return Err(invalid("v0", p.v0, "V0/W overflows"));
    }
    Ok(DimensionlessState {
        alpha,
        w,
        nu,
        lambda: lambda_from_nu(nu),
        lambda_excess: lambda_excess_from_nu(nu),
    })
}

/// `d lambda / dL` at fixed `V0`, `m`, `hbar`.
///
/// Differentiating `lambda (lambda - 1) = nu` with `d nu / dL = 2 nu / L`
/// gives `(2 nu / L) / (2 lambda - 1)`, which is positive: the exponent grows
/// with the width.
pub fn dlambda_dl(p: &ModelParams) -> Result<f64> {
    let s = derive_state(p)?;
    Ok(2.0 * s.nu / p.width / (2.0 * s.lambda - 1.0))
}

/// Maps a physical coordinate `x` in `[-L/2, L/2]` to `xi = pi x / L`.
pub fn dimensionless_coordinate(x: f64, p: &ModelParams) -> Result<f64> {
    p.validate()?;
    let half = 0.5 * p.width;
    if x.is_nan() || x.abs() > half {
        return Err(Error::OutOfDomain {
            x,
            range: format!("[-{half}, {half}]"),
        });
    }
    Ok(PI * x / p.width)
}
