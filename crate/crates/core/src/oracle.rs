//! Independent eigensolver for `-psi'' + nu / cos^2(xi) psi = eps psi` on
//! `(-pi/2, pi/2)` with `psi = 0` at both walls.
//!
//! The operator is discretized with the three-point Laplacian on a uniform
//! grid of `grid_points` subintervals. Only interior nodes carry unknowns,
//! so the singular endpoints never enter the matrix. Eigenvalues of the
//! resulting symmetric tridiagonal matrix are found one at a time by
//! bisection on the Sturm count; eigenvectors, when asked for, by inverse
//! iteration.
//!
//! `certify` runs two resolutions `N` and `2N` and turns their difference
//! into a per-level relative error bound (second-order Richardson estimate
//! times a safety factor of 10).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::wavefunction::count_sign_changes;

pub const MIN_GRID_POINTS: usize = 200;
pub const MAX_BISECTION_STEPS: usize = 10_000;
pub const SAFETY_FACTOR: f64 = 10.0;
const INVERSE_ITERATIONS: usize = 3;

/// Eigenvalues (and optionally eigenvectors) from the finite-difference
/// discretization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSpectrum {
    pub nu: f64,
    /// Subintervals actually used (after scaling for large `nu`).
    pub grid_points: usize,
    pub eigenvalues: Vec<f64>,
    /// Interior-node vectors with `sum v^2 h = 1`.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    /// Relative error bound per eigenvalue; `None` for a single-grid solve.
    pub certified_tol: Option<Vec<f64>>,
}

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(invalid(
                "off",
                off.len() as f64,
                "off-diagonal must be one shorter than the diagonal",
            ));
        }
        Ok(Self { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    fn pivmin(&self) -> f64 {
        let emax = self.off.iter().fold(1.0f64, |m, e| m.max(e * e));
        f64::MIN_POSITIVE * emax
    }

    /// Number of eigenvalues strictly below `x`, from the signs of the
    /// LDL^T pivots of `T - x I`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = self.pivmin();
        let mut count = 0;
        let mut q = 1.0;
        for (i, d) in self.diag.iter().enumerate() {
            q = if i == 0 {
                d - x
            } else {
                let e = self.off[i - 1];
                (d - x) - e * e / q
            };
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        let pad = f64::EPSILON * lo.abs().max(hi.abs()) + self.pivmin();
        (lo - pad, hi + pad)
    }

    /// The `k`-th smallest eigenvalue (0-based), by bisection.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.dim() {
            return Err(invalid("k", k as f64, "index beyond matrix dimension"));
        }
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..MAX_BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) + self.pivmin()
                || mid <= lo
                || mid >= hi
            {
                return Ok(mid);
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::Convergence {
            level: k,
            iterations: MAX_BISECTION_STEPS,
        })
    }

    /// Solves `(T - shift I) y = rhs` by Gaussian elimination without
    /// pivoting; tiny pivots are nudged so that a shift sitting on an
    /// eigenvalue still yields a finite (large) solution.
    fn shifted_solve(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let scale = self
            .diag
            .iter()
            .fold(0.0f64, |m, d| m.max(d.abs()))
            .max(1.0);
        let tiny = f64::EPSILON * scale;
        let guard = |p: f64| if p.abs() < tiny { tiny.copysign(p) } else { p };
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut piv = guard(self.diag[0] - shift);
        d[0] = rhs[0] / piv;
        for i in 1..n {
            c[i - 1] = self.off[i - 1] / piv;
            piv = guard(self.diag[i] - shift - self.off[i - 1] * c[i - 1]);
            d[i] = (rhs[i] - self.off[i - 1] * d[i - 1]) / piv;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        d
    }

    /// Eigenvector for a converged eigenvalue, unit Euclidean norm, first
    /// significant entry positive.
    pub fn eigenvector(&self, eigenvalue: f64) -> Vec<f64> {
        let n = self.dim();
        let mut v: Vec<f64> = (0..n)
            .map(|j| 1.0 + (j as f64 * 0.618_033_988_749_895).fract())
            .collect();
        for _ in 0..INVERSE_ITERATIONS {
            v = self.shifted_solve(eigenvalue, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        let vmax = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if let Some(first) = v.iter().find(|x| x.abs() > 1e-8 * vmax) {
            if *first < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
        v
    }
}

/// Subinterval count actually used: for `nu >= 1e4` at least `50 sqrt(nu)`
/// so the narrow central well stays resolved.
pub fn effective_grid_points(nu: f64, grid_points: usize) -> usize {
    if nu >= 1e4 {
        grid_points.max((50.0 * nu.sqrt()).ceil() as usize)
    } else {
        grid_points
    }
}

/// Finite-difference matrix on `grid_points` subintervals of `(-pi/2, pi/2)`.
pub fn hamiltonian(nu: f64, grid_points: usize) -> Tridiagonal {
    let h = PI / grid_points as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..grid_points)
        .map(|j| {
            // cos(-pi/2 + j h) measured from the nearer wall
            let c = (j.min(grid_points - j) as f64 * h).sin();
            2.0 * inv_h2 + nu / (c * c)
        })
        .collect();
    let off = vec![-inv_h2; grid_points - 2];
    Tridiagonal { diag, off }
}

/// Interior node abscissae matching `hamiltonian`.
pub fn interior_grid(grid_points: usize) -> Vec<f64> {
    let h = PI / grid_points as f64;
    (1..grid_points).map(|j| -0.5 * PI + j as f64 * h).collect()
}

fn check_inputs(nu: f64, k_levels: usize, grid_points: usize) -> Result<()> {
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(invalid("nu", nu, "must be finite and >= 0"));
    }
    if grid_points < MIN_GRID_POINTS {
        return Err(invalid(
            "grid_points",
            grid_points as f64,
            "need at least 200",
        ));
    }
    if k_levels == 0 || k_levels > grid_points / 10 {
        return Err(invalid(
            "k_levels",
            k_levels as f64,
            "need 1 <= k_levels <= grid_points / 10",
        ));
    }
    Ok(())
}

fn run(nu: f64, k_levels: usize, grid_points: usize, vectors: bool) -> Result<OracleSpectrum> {
    check_inputs(nu, k_levels, grid_points)?;
    let n = effective_grid_points(nu, grid_points);
    let t = hamiltonian(nu, n);
    let eigenvalues = (0..k_levels)
        .map(|k| t.eigenvalue(k))
        .collect::<Result<Vec<_>>>()?;
    let eigenvectors = vectors.then(|| {
        let scale = (PI / n as f64).sqrt().recip();
        eigenvalues
            .iter()
            .map(|&ev| t.eigenvector(ev).into_iter().map(|x| x * scale).collect())
            .collect()
    });
    Ok(OracleSpectrum {
        nu,
        grid_points: n,
        eigenvalues,
        eigenvectors,
        certified_tol: None,
    })
}

/// Lowest `k_levels` eigenvalues on a single grid.
pub fn solve(nu: f64, k_levels: usize, grid_points: usize) -> Result<OracleSpectrum> {
    run(nu, k_levels, grid_points, false)
}

/// As `solve`, with eigenvectors from inverse iteration.
pub fn solve_with_vectors(nu: f64, k_levels: usize, grid_points: usize) -> Result<OracleSpectrum> {
    run(nu, k_levels, grid_points, true)
}

/// Fine-grid eigenvalues with a Richardson error bound taken from the
/// `coarse` and `2 coarse` grids.
pub fn certify(nu: f64, k_levels: usize, coarse: usize) -> Result<OracleSpectrum> {
    certify_with(nu, k_levels, coarse, 2 * coarse)
}

pub fn certify_with(
    nu: f64,
    k_levels: usize,
    coarse: usize,
    fine: usize,
) -> Result<OracleSpectrum> {
    if fine != 2 * coarse {
        return Err(invalid(
            "fine",
            fine as f64,
            "fine grid must be twice the coarse grid",
        ));
    }
    let coarse = effective_grid_points(nu, coarse);
    let c = solve(nu, k_levels, coarse)?;
    let mut f = solve(nu, k_levels, 2 * coarse)?;
    let tol = c
        .eigenvalues
        .iter()
        .zip(&f.eigenvalues)
        .map(|(ec, ef)| SAFETY_FACTOR * (ef - ec).abs() / (3.0 * ef.abs()))
        .collect();
    f.certified_tol = Some(tol);
    Ok(f)
}

/// Node count of an oracle eigenvector, ignoring entries below `1e-10` of
/// its maximum.
pub fn vector_nodes(v: &[f64]) -> usize {
    let vmax = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    count_sign_changes(v, 1e-10 * vmax)
}
