//! Builds normalised eigenfunctions for a moderately deep well, then checks
//! their norms, mutual overlaps, node counts and how well they satisfy the
//! differential equation.

use poschl_teller::wavefunction::{eigenfunction, overlap, residual};
use poschl_teller::ModelParams;

fn main() -> poschl_teller::Result<()> {
    let p = ModelParams::default().with_nu(12.0);
    let tables: Vec<_> = (0..5)
        .map(|n| eigenfunction(n, &p, 4097))
        .collect::<Result<_, _>>()?;

    for t in &tables {
        println!(
            "n={}  norm={:.12}  nodes={}  residual={:.2e}",
            t.n,
            t.norm(),
            t.node_count(),
            residual(t, &p)?
        );
    }

    println!("\noverlap matrix");
    for a in &tables {
        let row: Vec<String> = tables
            .iter()
            .map(|b| overlap(a, b).map(|o| format!("{o:9.1e}")))
            .collect::<Result<_, _>>()?;
        println!("  {}", row.join(" "));
    }
    Ok(())
}
