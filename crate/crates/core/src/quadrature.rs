//! Composite Simpson rule on uniform grids.

use crate::error::{Error, Result};

/// Simpson integral of equally spaced samples `f` with spacing `h`.
///
/// Needs an odd number of samples (an even number of panels).
pub fn simpson(f: &[f64], h: f64) -> Result<f64> {
    let n = f.len();
    if n < 3 || n % 2 == 0 {
        return Err(Error::Quadrature(format!(
            "Simpson rule needs an odd sample count >= 3, got {n}"
        )));
    }
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, v) in f.iter().enumerate().take(n - 1).skip(1) {
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    Ok(h / 3.0 * (f[0] + f[n - 1] + 4.0 * odd + 2.0 * even))
}

/// Simpson integral of `g` over `[a, b]` with `panels` (rounded up to even)
/// subintervals.
pub fn simpson_fn<F: Fn(f64) -> f64>(g: F, a: f64, b: f64, panels: usize) -> Result<f64> {
    let panels = panels.max(2);
    let panels = panels + panels % 2;
    let h = (b - a) / panels as f64;
    let samples: Vec<f64> = (0..=panels).map(|i| g(a + i as f64 * h)).collect();
    simpson(&samples, h)
}
