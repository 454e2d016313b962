//! Walks the two limiting paths: widening the well at fixed V0/L^2 drives the
//! low spectrum towards a harmonic oscillator, shrinking V0 at fixed L drives
//! it towards the particle in a box.

use poschl_teller::report::commands::limits_table;
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    let table = limits_table(&ModelParams::default())?;
    print!("{}", table.to_csv()?);
    Ok(())
}
