//! Numerically exact eigenvalues of −κψ″ + (kx² + bx⁴)ψ = Eψ by two
//! independent routes: outward RKF45 shooting and truncated-basis
//! diagonalization.

mod rkf45;
mod shooting;

pub use rkf45::Rkf45;
pub use shooting::{shoot_eigenvalue, ShootingConfig};

use crate::error::{Error, Result};
use crate::model::AnharmonicSpec;
use crate::oscillator::{build_hamiltonian, OscBasis};

/// Basis size used for reference eigenvalues.
pub const DEFAULT_DIM: usize = 120;

/// Lowest `n_levels` eigenvalues of the Hamiltonian in a `dim`-state harmonic
/// basis of quantum `basis_u`, ascending.
pub fn diag_eigenvalues(
    spec: &AnharmonicSpec,
    dim: usize,
    basis_u: f64,
    n_levels: usize,
) -> Result<Vec<f64>> {
    if dim < n_levels + 20 {
        return Err(Error::domain(
            "dim",
            format!("need at least {} states for {n_levels} levels, got {dim}", n_levels + 20),
        ));
    }
    let basis = OscBasis::for_spec(spec, basis_u)?;
    let mut ev = build_hamiltonian(spec, &basis, dim)?.eigenvalues()?;
    ev.truncate(n_levels);
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anharmonic::solve_omega;

    fn spec(b: f64) -> AnharmonicSpec {
        AnharmonicSpec::with_default_stiffness(b).unwrap()
    }

    #[test]
    fn harmonic_spectrum() {
        let s = spec(0.0);
        let hw = s.hbar_omega();
        let ev = diag_eigenvalues(&s, 40, hw, 5).unwrap();
        for (n, e) in ev.iter().enumerate() {
            assert!((e - hw * (n as f64 + 0.5)).abs() < 1e-12 * hw);
        }
    }

    #[test]
    fn too_small_basis_rejected() {
        let s = spec(0.05);
        assert!(diag_eigenvalues(&s, 24, s.hbar_omega(), 5).is_err());
    }

    #[test]
    fn strong_coupling_ground_state() {
        let s = spec(0.25);
        let u0 = solve_omega(&s, 0).hbar_omega_n;
        let e = diag_eigenvalues(&s, 80, u0, 1).unwrap()[0];
        assert!((e - 2.0474629).abs() < 2e-4, "{e}");
    }

    #[test]
    fn basis_size_convergence() {
        let s = spec(0.05);
        let u0 = solve_omega(&s, 0).hbar_omega_n;
        let a = diag_eigenvalues(&s, 80, u0, 4).unwrap();
        let b = diag_eigenvalues(&s, 120, u0, 4).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-8, "{x} {y}");
        }
    }

    #[test]
    fn basis_frequency_independence() {
        for b in [0.01, 0.05, 0.25] {
            let s = spec(b);
            let u0 = solve_omega(&s, 0).hbar_omega_n;
            let bare = diag_eigenvalues(&s, 120, s.hbar_omega(), 4).unwrap();
            let opt = diag_eigenvalues(&s, 120, u0, 4).unwrap();
            for (x, y) in bare.iter().zip(&opt) {
                assert!((x - y).abs() < 1e-8, "b={b}: {x} {y}");
            }
            assert!(opt.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
