//! End-to-end self-check run by the `verify` subcommand.
//!
//! Every check measures one error figure and compares it against a fixed
//! tolerance. `tolerance_scale` multiplies all tolerances; setting it to 0
//! must make the run fail.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::Result;
use crate::model::{derive_state, lambda_from_nu, mu, ModelParams};
use crate::oracle;
use crate::potential::{v_center_expansion, v_pt, v_wall_expansion, CenterOrder};
use crate::pressure::{pressure_exact, pressure_fd_oracle, pressure_hf_oracle};
use crate::spectrum::{bloch_frequency, pt_energy};
use crate::wavefunction::{eigenfunction, overlap, residual};

use super::commands::BLOCH_LADDER;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct Suite {
    scale: f64,
    checks: Vec<Check>,
}

impl Suite {
    fn add(&mut self, name: impl Into<String>, measured: f64, tolerance: f64) {
        let tolerance = tolerance * self.scale;
        self.checks.push(Check {
            name: name.into(),
            measured,
            tolerance,
            passed: measured.is_finite() && measured <= tolerance,
        });
    }
}

fn unit() -> ModelParams {
    ModelParams::default()
}

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

pub fn run_checks(tolerance_scale: f64) -> Result<Vec<Check>> {
    let mut s = Suite {
        scale: tolerance_scale,
        checks: Vec::new(),
    };

    let mut worst = 0.0f64;
    for nu in log_grid(1e-6, 1e6, 61) {
        let p = unit().with_nu(nu);
        let lambda = derive_state(&p)?.lambda;
        for n in 0..=50u32 {
            let want = (f64::from(n) + lambda).powi(2);
            worst = worst.max(((pt_energy(n, &p)?.eps - want) / want).abs());
        }
    }
    s.add("spectrum_identity", worst, 1e-10);

    for &nu in &[0.0, 2.0, 12.0, 100.0] {
        let o = oracle::certify(nu, 8, 4000)?;
        let tol = o.certified_tol.as_deref().unwrap_or_default();
        let lambda = lambda_from_nu(nu);
        let ratio = o
            .eigenvalues
            .iter()
            .zip(tol)
            .enumerate()
            .map(|(k, (ev, t))| {
                let want = (k as f64 + lambda).powi(2);
                ((ev - want) / want).abs() / t
            })
            .fold(0.0, f64::max);
        s.add(format!("oracle_deviation_over_tol[nu={nu}]"), ratio, 1.0);
        s.add(
            format!("oracle_certified_tol[nu={nu}]"),
            tol.iter().copied().fold(0.0, f64::max),
            1e-4,
        );
    }

    let free = unit().with_v0(0.0);
    let w = derive_state(&free)?.w;
    let mut worst = 0.0f64;
    for n in 0..=50u32 {
        let m = f64::from(n + 1);
        worst = worst.max((pt_energy(n, &free)?.energy / (w * m * m) - 1.0).abs());
    }
    s.add("box_reduction", worst, 1e-15);

    let base = unit().with_nu(1e-6);
    let mut errs = Vec::new();
    for &f in &BLOCH_LADDER {
        let q = ModelParams {
            width: base.width * f,
            v0: base.v0 * f * f,
            ..base
        };
        let spacing = pt_energy(1, &q)?.energy - pt_energy(0, &q)?.energy;
        errs.push((spacing / (q.hbar * bloch_frequency(&q)?) - 1.0).abs());
    }
    let non_decreasing = errs.windows(2).filter(|w| w[1] >= w[0]).count();
    s.add(
        "bloch_spacing_monotone_steps_violated",
        non_decreasing as f64,
        0.0,
    );
    s.add("bloch_spacing_final_rel_err", *errs.last().unwrap(), 2e-3);

    let mut fd_err = 0.0f64;
    let mut hf_err = 0.0f64;
    for &nu in &[0.5, 2.0, 12.0, 100.0] {
        let p = unit().with_nu(nu);
        for n in 0..=5u32 {
            let exact = pressure_exact(n, &p)?.pressure;
            let fd = pressure_fd_oracle(n, &p, 1e-5)?;
            let hf = pressure_hf_oracle(n, &p, 8192)?.value;
            fd_err = fd_err.max(((fd - exact) / exact).abs());
            hf_err = hf_err.max(((hf - exact) / exact).abs());
        }
    }
    s.add("pressure_exact_vs_fd", fd_err, 1e-6);
    s.add("pressure_exact_vs_hf", hf_err, 1e-3);
    s.add(
        "pressure_ground_state_value",
        (pressure_exact(0, &unit())?.pressure / (4.0 / (3.0 * PI)) - 1.0).abs(),
        1e-14,
    );

    let mus: Vec<f64> = log_grid(1e-6, 1e6, 121)
        .map(|nu| mu(lambda_from_nu(nu)))
        .collect();
    let outside = mus.iter().filter(|&&m| !(m > 0.5 && m <= 1.0)).count();
    let non_monotone = mus.windows(2).filter(|w| w[1] > w[0]).count();
    s.add("mu_outside_bounds", outside as f64, 0.0);
    s.add("mu_monotone_steps_violated", non_monotone as f64, 0.0);
    s.add(
        "mu_large_nu_limit",
        (mu(lambda_from_nu(1e6)) - 0.5).abs(),
        1e-3,
    );

    let mut ortho = 0.0f64;
    let mut node_misses = 0usize;
    let mut parity = 0.0f64;
    let mut order_dev = 0.0f64;
    for &nu in &[0.0, 2.0, 12.0] {
        let p = unit().with_nu(nu);
        let tables = (0..=7u32)
            .map(|n| eigenfunction(n, &p, 4096))
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in tables.iter().enumerate() {
            for (j, b) in tables.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                ortho = ortho.max((overlap(a, b)? - target).abs());
            }
            if a.node_count() != a.n as usize {
                node_misses += 1;
            }
            let sign = if a.n % 2 == 0 { 1.0 } else { -1.0 };
            let m = a.max_abs();
            let len = a.len();
            for k in 0..len {
                parity = parity.max((a.values[k] - sign * a.values[len - 1 - k]).abs() / m);
            }
        }
        for n in [0u32, 3] {
            let r1 = residual(&eigenfunction(n, &p, 1024)?, &p)?;
            let r2 = residual(&eigenfunction(n, &p, 2048)?, &p)?;
            order_dev = order_dev.max(((r1 / r2).log2() - 2.0).abs());
        }
    }
    s.add("wavefunction_orthonormality", ortho, 1e-6);
    s.add("wavefunction_node_mismatches", node_misses as f64, 0.0);
    s.add("wavefunction_parity", parity, 1e-10);
    s.add("wavefunction_residual_order_dev", order_dev, 0.2);

    let p = unit();
    let exact = v_pt(0.1, &p)?;
    s.add(
        "potential_center_quartic",
        ((v_center_expansion(0.1, &p, CenterOrder::Quartic)? - exact) / exact).abs(),
        1e-3,
    );
    let x = PI / 2.0 - 0.1;
    let exact = v_pt(x, &p)?;
    s.add(
        "potential_wall_leading",
        ((v_wall_expansion(x, &p)? - exact) / exact).abs(),
        7e-3,
    );

    Ok(s.checks)
}

/// One line per check.
pub fn render_text(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        out.push_str(&format!(
            "{} {:<width$}  measured={:.3e}  tol={:.3e}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.measured,
            c.tolerance,
        ));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    out.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
    out
}
