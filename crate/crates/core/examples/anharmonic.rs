// Compares a deep well with its harmonic approximation, then adds back the
// first-order quartic shift and prints what is still left over.

use poschl_teller::spectrum::{anharmonic_correction, bloch_frequency, pt_energy};
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    let p = ModelParams::default().with_nu(1e4);
    let hw = p.hbar * bloch_frequency(&p)?;
    println!("hbar omega = {hw:.10}");
    for n in 0..8 {
        let e = pt_energy(n, &p)?.energy;
        let harmonic = hw * (f64::from(n) + 0.5);
        let corr = anharmonic_correction(n, &p)?;
        // falls off as W (n + 1/2) / (4 sqrt(nu))
        let left = e - harmonic - corr;
        println!(
            "n={n}  E={e:<18.10} harmonic={harmonic:<18.10} shift={corr:<12.8} left={left:.3e}"
        );
    }
    Ok(())
}
