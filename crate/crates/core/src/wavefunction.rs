//! Normalized eigenfunctions `psi_n(xi) = C_n cos(xi)^lambda G_n^lambda(sin xi)`
//! on `xi in (-pi/2, pi/2)`.
//!
//! Normalization is over `xi`; multiply by `sqrt(alpha)` for a function
//! normalized over the physical coordinate. `C_n` comes from Simpson
//! quadrature on the table grid and is always positive.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::{derive_state, ModelParams};
use crate::quadrature::simpson;

/// Relative distance of the outermost grid points from the walls.
pub const WALL_INSET: f64 = 1e-10;

/// Smallest accepted `grid_points`.
pub const MIN_GRID_POINTS: usize = 64;

/// Gegenbauer polynomial `G_n^lambda(u)` by the three-term recurrence
/// `n G_n = 2u (n + lambda - 1) G_{n-1} - (n + 2 lambda - 2) G_{n-2}`.
pub fn gegenbauer(n: u32, lambda: f64, u: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * u;
    for k in 2..=n {
        let k = f64::from(k);
        let next = (2.0 * u * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// Unnormalized `cos(xi)^lambda G_n^lambda(sin xi)`, from `cos xi >= 0` and
/// `sin xi`. Taking the pair keeps points near a wall accurate.
pub fn shape(n: u32, lambda: f64, cos_xi: f64, sin_xi: f64) -> f64 {
    cos_xi.powf(lambda) * gegenbauer(n, lambda, sin_xi)
}

/// A sampled, normalized eigenfunction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionTable {
    pub n: u32,
    pub lambda: f64,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub norm_constant: f64,
}

impl WavefunctionTable {
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Uniform spacing of the grid.
    pub fn step(&self) -> f64 {
        let n = self.grid.len();
        (self.grid[n - 1] - self.grid[0]) / (n - 1) as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Sign changes across the grid, ignoring exact zeros.
    pub fn node_count(&self) -> usize {
        count_sign_changes(&self.values, 0.0)
    }

    /// Evaluates the normalized eigenfunction at any `xi` in `[-pi/2, pi/2]`.
    pub fn eval(&self, xi: f64) -> f64 {
        let (s, c) = xi.sin_cos();
        self.norm_constant * shape(self.n, self.lambda, c.max(0.0), s)
    }

    /// Same, parametrised by the distance `d` from the right wall (`d > 0`
    /// small) or the left wall (`left = true`).
    pub fn eval_from_wall(&self, d: f64, left: bool) -> f64 {
        let (c, s) = d.sin_cos();
        let s = if left { -s } else { s };
        self.norm_constant * shape(self.n, self.lambda, c, s)
    }

    pub fn norm(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|v| v * v).collect();
        simpson(&sq, self.step()).unwrap_or(f64::NAN)
    }
}

/// Number of sign changes in `values`, skipping entries with
/// `|v| <= threshold`.
pub fn count_sign_changes(values: &[f64], threshold: f64) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for &v in values {
        if v.abs() <= threshold {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = v;
    }
    count
}

/// Symmetric uniform grid on `[-xi_max, xi_max]`, `xi_max = (pi/2)(1 - WALL_INSET)`,
/// with an odd number of points.
pub fn symmetric_grid(points: usize) -> Vec<f64> {
    let points = points + (1 - points % 2);
    let xi_max = FRAC_PI_2 * (1.0 - WALL_INSET);
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| xi_max * ((2 * i) as f64 - last) / last)
        .collect()
}

/// Samples and normalizes `psi_n` for the given parameters.
///
/// `grid_points` is rounded up to the next odd number for Simpson's rule.
pub fn eigenfunction(n: u32, p: &ModelParams, grid_points: usize) -> Result<WavefunctionTable> {
    let s = derive_state(p)?;
    eigenfunction_for_lambda(n, s.lambda, grid_points)
}

pub fn eigenfunction_for_lambda(
    n: u32,
    lambda: f64,
    grid_points: usize,
) -> Result<WavefunctionTable> {
    if grid_points < MIN_GRID_POINTS {
        return Err(invalid(
            "grid_points",
            grid_points as f64,
            "need at least 64 grid points",
        ));
    }
    if !(lambda.is_finite() && lambda >= 1.0) {
        return Err(invalid("lambda", lambda, "must be finite and >= 1"));
    }
    let grid = symmetric_grid(grid_points);
    let raw: Vec<f64> = grid
        .iter()
        .map(|&xi| {
            let (s, c) = xi.sin_cos();
            shape(n, lambda, c, s)
        })
        .collect();
    let h = (grid[grid.len() - 1] - grid[0]) / (grid.len() - 1) as f64;
    let sq: Vec<f64> = raw.iter().map(|v| v * v).collect();
    let integral = simpson(&sq, h)?;
    if !(integral.is_finite() && integral > 0.0) {
        return Err(Error::Quadrature(format!(
            "normalization integral for n = {n}, lambda = {lambda} is {integral}"
        )));
    }
    let norm_constant = integral.sqrt().recip();
    let values = raw.iter().map(|v| v * norm_constant).collect();
    Ok(WavefunctionTable {
        n,
        lambda,
        grid,
        values,
        norm_constant,
    })
}

/// Sup-norm of `psi'' + (eps_n - nu / cos^2 xi) psi` over the interior 90 %
/// of the grid, relative to `max |psi|`. `psi''` uses central differences.
pub fn residual(table: &WavefunctionTable, p: &ModelParams) -> Result<f64> {
    let s = derive_state(p)?;
    let len = table.len();
    let h = table.step();
    let eps = (f64::from(table.n) + table.lambda).powi(2);
    let skip = ((0.05 * len as f64).ceil() as usize).max(1);
    let v = &table.values;
    let mut worst = 0.0f64;
    for i in skip..len - skip {
        let d2 = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / (h * h);
        let c = table.grid[i].cos();
        let r = d2 + (eps - s.nu / (c * c)) * v[i];
        worst = worst.max(r.abs());
    }
    Ok(worst / table.max_abs())
}

/// Simpson overlap integral of two tables on the same grid.
pub fn overlap(a: &WavefunctionTable, b: &WavefunctionTable) -> Result<f64> {
    if a.grid.len() != b.grid.len()
        || a.grid.first() != b.grid.first()
        || a.grid.last() != b.grid.last()
        || a.lambda != b.lambda
    {
        return Err(Error::GridMismatch);
    }
    let prod: Vec<f64> = a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect();
    simpson(&prod, a.step())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit(v0: f64) -> ModelParams {
        ModelParams::new(1.0, v0, PI, 1.0).unwrap()
    }

    #[test]
    fn gegenbauer_low_orders() {
        for &(l, u) in &[(1.0, 0.3), (2.0, -0.9), (7.5, 0.0)] {
            assert_eq!(gegenbauer(0, l, u), 1.0);
        }
        assert_eq!(gegenbauer(1, 2.0, 0.5), 2.0);
        // G_2^lambda(u) = 2 lambda (lambda + 1) u^2 - lambda
        for &u in &[-1.0, -0.4, 0.0, 0.25, 1.0] {
            let direct = 2.0 * 2.0 * 3.0 * u * u - 2.0;
            assert!((gegenbauer(2, 2.0, u) - direct).abs() < 1e-14);
        }
        assert_eq!(gegenbauer(2, 2.0, 1.0), 10.0);
    }

    #[test]
    fn gegenbauer_lambda_one_is_chebyshev_u() {
        // U_n(cos t) = sin((n+1) t) / sin t
        let t: f64 = 0.7;
        for n in 0..12u32 {
            let want = ((f64::from(n) + 1.0) * t).sin() / t.sin();
            assert!((gegenbauer(n, 1.0, t.cos()) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_of_free_particle() {
        let t = eigenfunction(0, &unit(0.0), 2049).unwrap();
        assert_eq!(t.len(), 2049);
        assert!((t.norm_constant - (2.0 / PI).sqrt()).abs() < 1e-10);
        for (xi, v) in t.grid.iter().zip(&t.values) {
            assert!((v - (2.0 / PI).sqrt() * xi.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_at_lambda_two() {
        let t = eigenfunction(0, &unit(1.0), 2049).unwrap();
        // int cos^4 = 3 pi / 8
        assert!((t.norm_constant - (8.0 / (3.0 * PI)).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn first_excited_state_is_odd_with_one_node() {
        for &v0 in &[0.0, 1.0, 6.0] {
            let t = eigenfunction(1, &unit(v0), 1025).unwrap();
            assert_eq!(t.values[512], 0.0);
            assert_eq!(t.node_count(), 1);
            for i in 0..t.len() {
                assert_eq!(t.values[i], -t.values[t.len() - 1 - i]);
            }
        }
    }

    #[test]
    fn table_invariants() {
        for &v0 in &[0.0, 1.0, 6.0] {
            for n in 0..=10u32 {
                let t = eigenfunction(n, &unit(v0), 2048).unwrap();
                let m = t.max_abs();
                assert!(t.values[0].abs() <= 1e-8 * m);
                assert!(t.values[t.len() - 1].abs() <= 1e-8 * m);
                assert!((t.norm() - 1.0).abs() < 1e-8);
                assert_eq!(t.node_count(), n as usize);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                for i in 0..t.len() {
                    let d = t.values[i] - sign * t.values[t.len() - 1 - i];
                    assert!(d.abs() <= 1e-10 * m);
                }
            }
        }
    }

    #[test]
    fn residual_bounds() {
        let t = eigenfunction(0, &unit(0.0), 2048).unwrap();
        assert!(residual(&t, &unit(0.0)).unwrap() <= 1e-5);
        let t = eigenfunction(0, &unit(1.0), 2048).unwrap();
        assert!(residual(&t, &unit(1.0)).unwrap() <= 1e-4);
    }

    #[test]
    fn residual_is_second_order() {
        let p = unit(1.0);
        let coarse = residual(&eigenfunction(2, &p, 1024).unwrap(), &p).unwrap();
        let fine = residual(&eigenfunction(2, &p, 2048).unwrap(), &p).unwrap();
        let ratio = coarse / fine;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn overlaps() {
        let p = unit(1.0);
        let a = eigenfunction(0, &p, 2048).unwrap();
        let b = eigenfunction(1, &p, 2048).unwrap();
        let c = eigenfunction(2, &p, 2048).unwrap();
        assert!((overlap(&a, &a).unwrap() - 1.0).abs() < 1e-8);
        assert!(overlap(&a, &b).unwrap().abs() < 1e-10);
        assert!(overlap(&a, &c).unwrap().abs() < 1e-7);
    }

    #[test]
    fn overlap_rejects_mismatched_tables() {
        let a = eigenfunction(0, &unit(1.0), 2048).unwrap();
        let b = eigenfunction(0, &unit(1.0), 1024).unwrap();
        let c = eigenfunction(0, &unit(2.0), 2048).unwrap();
        assert!(matches!(overlap(&a, &b), Err(Error::GridMismatch)));
        assert!(matches!(overlap(&a, &c), Err(Error::GridMismatch)));
    }

    #[test]
    fn rejects_small_grids() {
        assert!(eigenfunction(0, &unit(1.0), 63).is_err());
    }

    #[test]
    fn decay_near_wall_follows_cos_power() {
        let p = unit(6.0);
        let t = eigenfunction(3, &p, 257).unwrap();
        let (d1, d2) = (1e-3, 1e-5);
        let r1 = t.eval_from_wall(d1, false).abs().ln() - t.lambda * d1.sin().ln();
        let r2 = t.eval_from_wall(d2, false).abs().ln() - t.lambda * d2.sin().ln();
        assert!((r1 - r2).abs() < 1e-4);
    }

    #[test]
    fn sign_changes_ignore_small_entries() {
        assert_eq!(
            count_sign_changes(&[1.0, 0.0, -1.0, 1e-20, -2.0, 3.0], 1e-12),
            2
        );
    }
}
