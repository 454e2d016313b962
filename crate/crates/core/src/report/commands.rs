//! Table builders behind the `spectrum`, `wavefunction`, `pressure` and
//! `limits` subcommands.

use crate::error::{invalid, Result};
use crate::model::{derive_state, ModelParams};
use crate::oracle;
use crate::pressure::{pressure_exact, pressure_fd_oracle, pressure_hf_oracle, DEFAULT_REL_STEP};
use crate::spectrum::{bloch_frequency, pt_energy};
use crate::wavefunction::{eigenfunction, residual, WavefunctionTable};

use super::table::{format_float, Cell, Table};

/// Rows `(n, E, eps, E_box_part, E_osc_part)`; with `oracle_grid` also the
/// certified finite-difference eigenvalue, its relative deviation from
/// `(n + lambda)^2` and the certified tolerance.
pub fn spectrum_table(p: &ModelParams, n_max: u32, oracle_grid: Option<usize>) -> Result<Table> {
    let mut cols = vec!["n", "E", "eps", "E_box_part", "E_osc_part"];
    let certified = match oracle_grid {
        Some(grid) => {
            cols.extend(["eps_oracle", "rel_dev", "certified_tol"]);
            let s = derive_state(p)?;
            Some(oracle::certify(s.nu, n_max as usize + 1, grid)?)
        }
        None => None,
    };
    let mut t = Table::new(cols);
    for n in 0..=n_max {
        let l = pt_energy(n, p)?;
        let mut row = vec![
            Cell::from(n),
            l.energy.into(),
            l.eps.into(),
            l.box_part.into(),
            l.osc_part.into(),
        ];
        if let Some(o) = &certified {
            let k = n as usize;
            let ev = o.eigenvalues[k];
            let tol = o.certified_tol.as_ref().map_or(f64::NAN, |t| t[k]);
            let exact = (f64::from(n) + derive_state(p)?.lambda).powi(2);
            row.extend([ev.into(), ((ev - exact) / exact).abs().into(), tol.into()]);
        }
        t.push(row);
    }
    Ok(t)
}

/// A sampled eigenfunction with the metadata written into its plot header.
#[derive(Debug, Clone)]
pub struct WavefunctionOutput {
    pub table: WavefunctionTable,
    pub residual: f64,
}

impl WavefunctionOutput {
    pub fn header(&self) -> Vec<(String, String)> {
        vec![
            ("n".into(), self.table.n.to_string()),
            ("lambda".into(), format_float(self.table.lambda)),
            (
                "norm_constant".into(),
                format_float(self.table.norm_constant),
            ),
            ("residual".into(), format_float(self.residual)),
        ]
    }

    pub fn to_plot_text(&self) -> String {
        let mut t = Table::new(["xi", "psi"]);
        for (&xi, &v) in self.table.grid.iter().zip(&self.table.values) {
            t.push(vec![xi.into(), v.into()]);
        }
        t.to_plot_text(&self.header())
    }
}

pub fn wavefunctions(
    p: &ModelParams,
    n_max: u32,
    grid_points: usize,
) -> Result<Vec<WavefunctionOutput>> {
    (0..=n_max)
        .map(|n| {
            let table = eigenfunction(n, p, grid_points)?;
            let residual = residual(&table, p)?;
            Ok(WavefunctionOutput { table, residual })
        })
        .collect()
}

/// Marker written in place of the expectation-value pressure for the bare box.
pub const WALL_DOMINATED: &str = "wall-dominated";

/// Rows `(n, P_exact, P_fd, P_hf, mu, rel_spread)`.
pub fn pressure_table(p: &ModelParams, n_max: u32, grid_points: usize) -> Result<Table> {
    let mut t = Table::new(["n", "P_exact", "P_fd", "P_hf", "mu", "rel_spread"]);
    for n in 0..=n_max {
        let exact = pressure_exact(n, p)?;
        let fd = pressure_fd_oracle(n, p, DEFAULT_REL_STEP)?;
        let hf = pressure_hf_oracle(n, p, grid_points)?;
        let mut values = vec![exact.pressure, fd];
        let hf_cell = if hf.wall_dominated {
            Cell::from(WALL_DOMINATED)
        } else {
            values.push(hf.value);
            Cell::Float(hf.value)
        };
        t.push(vec![
            Cell::from(n),
            exact.pressure.into(),
            fd.into(),
            hf_cell,
            exact.mu.into(),
            max_rel_spread(&values).into(),
        ]);
    }
    Ok(t)
}

/// Largest pairwise `|a - b| / max(|a|, |b|)`.
pub fn max_rel_spread(values: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            let scale = a.abs().max(b.abs());
            if scale > 0.0 {
                worst = worst.max((a - b).abs() / scale);
            }
        }
    }
    worst
}

/// Width multipliers along the harmonic-limit path.
pub const BLOCH_LADDER: [f64; 4] = [1.0, 10.0, 100.0, 1000.0];
/// `V0` multipliers along the free-particle path.
pub const BOX_LADDER: [f64; 7] = [1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6];

/// Two sweeps in one table.
///
/// `path = bloch`: `L` grows along `BLOCH_LADDER` with `V0 alpha^2` held
/// fixed; `spacing_rel_err = |(E_1 - E_0) / (hbar omega_B) - 1|`.
/// `path = box`: `V0` shrinks along `BOX_LADDER` at fixed `L`;
/// `box_deviation = max_{n <= 5} |E_n / (W (n+1)^2) - 1|`.
/// Both carry the ground-state pressure `P0`.
pub fn limits_table(p: &ModelParams) -> Result<Table> {
    p.validate()?;
    if p.v0 <= 0.0 {
        return Err(invalid("v0", p.v0, "limit sweeps need V0 > 0"));
    }
    let mut t = Table::new([
        "path",
        "factor",
        "L",
        "V0",
        "nu",
        "lambda",
        "spacing",
        "hbar_omega_bloch",
        "spacing_rel_err",
        "box_deviation",
        "P0",
    ]);
    for &f in &BLOCH_LADDER {
        let q = ModelParams {
            width: p.width * f,
            v0: p.v0 * f * f,
            ..*p
        };
        let s = derive_state(&q)?;
        let spacing = pt_energy(1, &q)?.energy - pt_energy(0, &q)?.energy;
        let hw = q.hbar * bloch_frequency(&q)?;
        t.push(vec![
            "bloch".into(),
            f.into(),
            q.width.into(),
            q.v0.into(),
            s.nu.into(),
            s.lambda.into(),
            spacing.into(),
            hw.into(),
            (spacing / hw - 1.0).abs().into(),
            Cell::Empty,
            pressure_exact(0, &q)?.pressure.into(),
        ]);
    }
    for &f in &BOX_LADDER {
        let q = p.with_v0(p.v0 * f);
        let s = derive_state(&q)?;
        let spacing = pt_energy(1, &q)?.energy - pt_energy(0, &q)?.energy;
        let mut dev = 0.0f64;
        for n in 0..=5u32 {
            let m = f64::from(n + 1);
            dev = dev.max((pt_energy(n, &q)?.energy / (s.w * m * m) - 1.0).abs());
        }
        t.push(vec![
            "box".into(),
            f.into(),
            q.width.into(),
            q.v0.into(),
            s.nu.into(),
            s.lambda.into(),
            spacing.into(),
            Cell::Empty,
            Cell::Empty,
            dev.into(),
            pressure_exact(0, &q)?.pressure.into(),
        ]);
    }
    Ok(t)
}
