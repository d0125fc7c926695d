//! Two independent exact solvers: shooting with adaptive RK45 and
//! diagonalization in a truncated harmonic basis.

use varpert::anharmonic::solve_omega;
use varpert::exact::{diag_eigenvalues, shoot_eigenvalue, ShootingConfig};
use varpert::model::AnharmonicSpec;

fn main() -> varpert::Result<()> {
    let cfg = ShootingConfig::default();
    for b in [0.01, 0.25, 1.0] {
        let spec = AnharmonicSpec::with_default_stiffness(b)?;
        let basis = solve_omega(&spec, 0).hbar_omega_n;
        let small = diag_eigenvalues(&spec, 40, basis, 4)?;
        let big = diag_eigenvalues(&spec, 160, basis, 4)?;
        for n in 0..4 {
            let shot = shoot_eigenvalue(&spec, n, &cfg)?;
            println!(
                "b={b:<4} n={n}  shooting {shot:.9}  diag(160) {:.9}  diag(40) {:.9}  |Δ| {:.1e}",
                big[n],
                small[n],
                (shot - big[n]).abs()
            );
        }
    }
    Ok(())
}
