//! Diagonalises the finite-difference Hamiltonian on two grids and compares
//! the certified numerical eigenvalues with the closed form (n + lambda)^2.

use poschl_teller::model::lambda_from_nu;
use poschl_teller::oracle;

fn main() -> poschl_teller::Result<()> {
    for nu in [0.0, 0.5, 2.0, 12.0, 1e4] {
        let lambda = lambda_from_nu(nu);
        let o = oracle::certify(nu, 6, 2000)?;
        let tol = o.certified_tol.as_deref().unwrap_or_default();
        println!("nu = {nu} (grid {})", o.grid_points);
        for (n, (eps, t)) in o.eigenvalues.iter().zip(tol).enumerate() {
            let exact = (n as f64 + lambda).powi(2);
            let dev = (eps - exact).abs() / exact;
            println!(
                "  n={n}  oracle={eps:<20.12} exact={exact:<20.12} dev={dev:.2e}  tol={t:.2e}"
            );
        }
    }
    Ok(())
}
