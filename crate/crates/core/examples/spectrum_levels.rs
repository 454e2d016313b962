//! Prints the first levels together with their box and oscillator parts.

use poschl_teller::model::derive_state;
use poschl_teller::spectrum::spectrum;
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    for nu in [0.0, 2.0, 12.0, 1e4] {
        let p = ModelParams::default().with_nu(nu);
        let s = derive_state(&p)?;
        println!("nu = {nu}  lambda = {:.12}  W = {:.6}", s.lambda, s.w);
        for l in spectrum(5, &p)? {
            println!(
                "  n={}  E={:<22.15e} box={:<22.15e} osc={:.15e}",
                l.n, l.energy, l.box_part, l.osc_part
            );
        }
    }
    Ok(())
}
