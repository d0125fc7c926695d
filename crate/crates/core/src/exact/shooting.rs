use crate::anharmonic::energy_variational;
use crate::error::{Error, Result};
use crate::exact::Rkf45;
use crate::model::AnharmonicSpec;

/// Knobs for the shooting solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    /// Integration half-width in Å. `None` places the wall 25 WKB decay
    /// lengths beyond the classical turning point of the level estimate.
    pub x_max: Option<f64>,
    pub abs_tol: f64,
    /// Final width of the energy bracket, eV.
    pub energy_tol: f64,
    /// Budget for bracket expansion plus bisection.
    pub max_iterations: usize,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        ShootingConfig {
            x_max: None,
            abs_tol: 1e-10,
            energy_tol: 1e-10,
            max_iterations: 200,
        }
    }
}

impl ShootingConfig {
    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol <= 1e-6) {
            return Err(Error::domain("abs_tol", format!("must lie in (0, 1e-6], got {}", self.abs_tol)));
        }
        if !(self.energy_tol > 0.0) {
            return Err(Error::domain("energy_tol", format!("must be > 0, got {}", self.energy_tol)));
        }
        if let Some(x) = self.x_max {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::domain("x_max", format!("must be > 0, got {x}")));
            }
        }
        Ok(())
    }
}

/// Smallest x > 0 with kx² + bx⁴ = v.
fn classical_wall(spec: &AnharmonicSpec, v: f64) -> f64 {
    let (k, b) = (spec.stiffness_k(), spec.quartic_b());
    let x2 = if b == 0.0 {
        v / k
    } else {
        // positive root of b·t² + k·t − v = 0, written to avoid cancellation
        2.0 * v / (k + (k * k + 4.0 * b * v).sqrt())
    };
    x2.sqrt()
}

/// Point beyond the turning point of energy `e` where the WKB exponent
/// ∫ √((V − e)/κ) dx reaches `decay_lengths`.
fn decay_wall(spec: &AnharmonicSpec, e: f64, decay_lengths: f64) -> f64 {
    let (k, b, kappa) = (spec.stiffness_k(), spec.quartic_b(), spec.kappa());
    let rate = |x: f64| ((k * x * x + b * x.powi(4) - e).max(0.0) / kappa).sqrt();
    let mut x = classical_wall(spec, e);
    let dx = 1e-3 * x.max(1e-3);
    let mut exponent = 0.0;
    while exponent < decay_lengths {
        exponent += 0.5 * (rate(x) + rate(x + dx)) * dx;
        x += dx;
    }
    x
}

struct Shooter<'a> {
    spec: &'a AnharmonicSpec,
    odd: bool,
    x_max: f64,
    ode: Rkf45,
}

impl Shooter<'_> {
    /// Sign changes of ψ on (0, x_max] for trial energy `e`.
    fn nodes(&self, e: f64) -> Result<usize> {
        let (k, b, kappa) = (self.spec.stiffness_k(), self.spec.quartic_b(), self.spec.kappa());
        let rhs = |x: f64, y: &[f64; 2]| {
            let x2 = x * x;
            [y[1], (k * x2 + b * x2 * x2 - e) / kappa * y[0]]
        };
        let y0 = if self.odd { [0.0, 1.0] } else { [1.0, 0.0] };
        let mut last_sign = if self.odd { 0.0 } else { 1.0 };
        let mut count = 0;
        self.ode.integrate(rhs, 0.0, y0, self.x_max, |_, y| {
            let s = if y[0] > 0.0 {
                1.0
            } else if y[0] < 0.0 {
                -1.0
            } else {
                0.0
            };
            if s != 0.0 {
                if last_sign != 0.0 && s != last_sign {
                    count += 1;
                }
                last_sign = s;
            }
        })?;
        Ok(count)
    }
}

/// The n-th bound-state energy, found by parity-adapted outward shooting
/// on [0, x_max] and bisection on the node count.
pub fn shoot_eigenvalue(spec: &AnharmonicSpec, n: usize, cfg: &ShootingConfig) -> Result<f64> {
    cfg.validate()?;
    let hw = spec.hbar_omega();
    let x_max = match cfg.x_max {
        Some(x) => x,
        None => decay_wall(spec, energy_variational(spec, n).e_total, 25.0),
    };
    let shooter = Shooter {
        spec,
        odd: n % 2 == 1,
        x_max,
        ode: Rkf45::new(cfg.abs_tol, x_max / 100.0),
    };
    // index among states of this parity
    let target = n / 2;

    let mut lo = 0.0;
    let mut hi = hw * (n as f64 + 1.0);
    let mut iterations = 0;
    while shooter.nodes(hi)? <= target {
        lo = hi;
        hi *= 2.0;
        iterations += 1;
        if iterations > cfg.max_iterations {
            return Err(Error::convergence(
                "shooting",
                format!("no upper bracket for level {n} below {hi} eV"),
            ));
        }
    }
    let lo_nodes = shooter.nodes(lo)?;
    if lo_nodes > target {
        return Err(Error::convergence(
            "shooting",
            format!("lower bracket {lo} eV already has {lo_nodes} nodes, want {target}"),
        ));
    }
    while hi - lo > cfg.energy_tol {
        iterations += 1;
        if iterations > cfg.max_iterations {
            return Err(Error::convergence(
                "shooting",
                format!("bracket [{lo}, {hi}] still wider than {:e} eV", cfg.energy_tol),
            ));
        }
        let mid = 0.5 * (lo + hi);
        if shooter.nodes(mid)? <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (nl, nh) = (shooter.nodes(lo)?, shooter.nodes(hi)?);
    if nl != target || nh != target + 1 {
        return Err(Error::convergence(
            "shooting",
            format!("node counts {nl}/{nh} at final bracket, expected {target}/{}", target + 1),
        ));
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::diag_eigenvalues;

    fn spec(b: f64) -> AnharmonicSpec {
        AnharmonicSpec::with_default_stiffness(b).unwrap()
    }

    #[test]
    fn wall_sits_on_the_potential() {
        let s = spec(0.05);
        let x = classical_wall(&s, 40.0);
        assert!((0.5 * x * x + 0.05 * x.powi(4) - 40.0).abs() < 1e-12);
        let s = spec(0.0);
        assert!((classical_wall(&s, 8.0) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn decay_wall_exponent() {
        // harmonic: ∫_{x_t}^{X} √(k(x² − x_t²)/κ) dx in closed form
        let s = spec(0.0);
        let e = 1.5;
        let x = decay_wall(&s, e, 25.0);
        let xt = classical_wall(&s, e);
        let g = (0.5 / s.kappa()).sqrt();
        let q = (x * x - xt * xt).sqrt();
        let exponent = g * 0.5 * (x * q - xt * xt * (x / xt + q / xt).ln());
        assert!((exponent - 25.0).abs() < 0.05, "{exponent}");
    }

    #[test]
    fn harmonic_levels() {
        let s = spec(0.0);
        let hw = s.hbar_omega();
        for n in 0..5 {
            let e = shoot_eigenvalue(&s, n, &ShootingConfig::default()).unwrap();
            assert!((e - hw * (n as f64 + 0.5)).abs() < 1e-8, "n={n}: {e}");
        }
    }

    #[test]
    fn reference_exact_values() {
        let cfg = ShootingConfig::default();
        let e = shoot_eigenvalue(&spec(0.01), 0, &cfg).unwrap();
        assert!((e - 1.4327725).abs() < 2e-4);
        let e = shoot_eigenvalue(&spec(0.05), 1, &cfg).unwrap();
        assert!((e - 5.091282).abs() < 2e-4);
    }

    #[test]
    fn agrees_with_diagonalization() {
        let cfg = ShootingConfig::default();
        for b in [0.01, 0.05, 0.25] {
            let s = spec(b);
            let diag = diag_eigenvalues(&s, 120, s.hbar_omega(), 4).unwrap();
            for (n, d) in diag.iter().enumerate() {
                let e = shoot_eigenvalue(&s, n, &cfg).unwrap();
                assert!((e - d).abs() <= 1e-5, "b={b} n={n}: {e} vs {d}");
            }
        }
    }

    #[test]
    fn halving_tolerance_stays_within_old_tolerance() {
        let s = spec(0.05);
        let coarse = ShootingConfig {
            energy_tol: 1e-6,
            ..ShootingConfig::default()
        };
        let fine = ShootingConfig {
            energy_tol: 5e-7,
            ..coarse
        };
        for n in 0..3 {
            let a = shoot_eigenvalue(&s, n, &coarse).unwrap();
            let b = shoot_eigenvalue(&s, n, &fine).unwrap();
            assert!((a - b).abs() <= 1e-6, "n={n}");
        }
    }

    #[test]
    fn config_validation() {
        let s = spec(0.05);
        let bad = ShootingConfig {
            abs_tol: 1e-3,
            ..ShootingConfig::default()
        };
        assert!(matches!(shoot_eigenvalue(&s, 0, &bad), Err(Error::Domain { field: "abs_tol", .. })));
        let bad = ShootingConfig {
            energy_tol: 0.0,
            ..ShootingConfig::default()
        };
        assert!(shoot_eigenvalue(&s, 0, &bad).is_err());
    }

    #[test]
    fn exhausted_budget_is_a_convergence_error() {
        let cfg = ShootingConfig {
            max_iterations: 3,
            ..ShootingConfig::default()
        };
        assert!(matches!(
            shoot_eigenvalue(&spec(0.05), 0, &cfg),
            Err(Error::Convergence { solver: "shooting", .. })
        ));
    }
}
