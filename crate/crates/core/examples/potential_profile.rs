//! Samples the well across the interval and compares it with its two
//! asymptotic forms: the quadratic/quartic expansion near the centre and the
//! inverse-square wall term near either edge.
//!
//! ```text
//! cargo run --example potential_profile
//! ```

use std::f64::consts::PI;

use poschl_teller::potential::{v_center_expansion, v_pt, v_wall_expansion, CenterOrder};
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    let p = ModelParams::new(1.0, 2.0, PI, 1.0)?;
    let half = 0.5 * p.width;

    println!(
        "{:>8} {:>14} {:>14} {:>14} {:>14}",
        "x/L", "V", "V_harm", "V_quart", "V_wall"
    );
    for i in 0..=19 {
        let x = half * f64::from(i) / 20.0;
        let v = v_pt(x, &p)?;
        let h = v_center_expansion(x, &p, CenterOrder::Harmonic)?;
        let q = v_center_expansion(x, &p, CenterOrder::Quartic)?;
        let wall = match v_wall_expansion(x, &p) {
            Ok(w) => format!("{w:14.6e}"),
            Err(_) => format!("{:>14}", "-"),
        };
        println!("{:8.4} {v:14.6e} {h:14.6e} {q:14.6e} {wall}", x / p.width);
    }
    Ok(())
}
