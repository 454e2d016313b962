//! The Pöschl–Teller confined oscillator, `V(x) = V0 tan^2(pi x / L)` on
//! `(-L/2, L/2)`.
//!
//! The model interpolates between a particle in a hard-wall box (`V0 -> 0`)
//! and the harmonic oscillator (`L, V0 -> inf` with `V0 / L^2` fixed). This
//! crate evaluates the exact spectrum and eigenfunctions, the limiting
//! forms, and the per-level pressure `-dE_n/dL`, and checks all of them
//! against an independent finite-difference eigensolver.
//!
//! ```
//! use poschl_teller::{model::ModelParams, spectrum::pt_energy};
//!
//! // hbar = m = 1, L = pi, V0 = 1: lambda = 2, W = 1/2
//! let p = ModelParams::default();
//! assert_eq!(pt_energy(1, &p).unwrap().energy, 3.5);
//! ```

pub mod error;
pub mod model;
pub mod oracle;
pub mod potential;
pub mod pressure;
pub mod quadrature;
pub mod report;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
pub use model::{derive_state, DimensionlessState, ModelParams};
