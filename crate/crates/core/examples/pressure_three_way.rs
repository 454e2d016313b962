//! Wall pressure from the closed form, a central difference of the energy in
//! L, and the expectation value of the force, side by side.
//!
//! The force expectation is singular at the walls when V0 = 0, where the
//! pressure is carried entirely by the boundary condition.

use poschl_teller::pressure::{
    pressure_exact, pressure_fd_oracle, pressure_hf_oracle, DEFAULT_REL_STEP,
};
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    for nu in [0.0, 0.5, 2.0, 12.0] {
        let p = ModelParams::default().with_nu(nu);
        println!("nu = {nu}");
        for n in 0..4 {
            let exact = pressure_exact(n, &p)?;
            let fd = pressure_fd_oracle(n, &p, DEFAULT_REL_STEP)?;
            let hf = pressure_hf_oracle(n, &p, 4096)?;
            let hf = if hf.wall_dominated {
                "wall-dominated".to_string()
            } else {
                format!("{:.12}", hf.value)
            };
            println!(
                "  n={n}  exact={:.12}  fd={fd:.12}  hf={hf}  mu={:.6}",
                exact.pressure, exact.mu
            );
        }
    }
    Ok(())
}
