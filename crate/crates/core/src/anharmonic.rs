//! Perturbation theory on a variationally optimized harmonic basis for
//! H = p²/2m + k·x² + b·x⁴, plus the bare-frequency series for comparison.
//!
//! Every energy takes the basis quantum `u = ħΩ` explicitly. For level n the
//! optimal quantum is the positive root of
//!
//! ```text
//! u³ − (ħω)²·u − 24·b·κ²·g(n) = 0,    g(n) = (2n² + 2n + 1)/(2n + 1)
//! ```
//!
//! and on that root the second-order sum collapses to
//! `β²/(4u) · P(n)/(2n+1)²` with `β = bκ²/u²`.

use crate::error::{Error, Result};
use crate::model::{AnharmonicSpec, LevelResult, Method};
use crate::oscillator::{hprime_element, x4_element, OscBasis};
use crate::scheme::ParentFamily;

/// Which quintic to use in the on-shell second-order closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosedForm {
    /// 64n⁵ + 160n⁴ − 336n³ − 664n² − 280n − 24, identical to the explicit sum.
    #[default]
    Corrected,
    /// The historically published coefficients with −28n in the linear term.
    /// Agrees with the sum only at n = 0; kept to reproduce printed tables.
    AsPrinted,
}

impl ClosedForm {
    pub fn polynomial(self, n: usize) -> f64 {
        let n = n as f64;
        let linear = match self {
            ClosedForm::Corrected => 280.0,
            ClosedForm::AsPrinted => 28.0,
        };
        ((((64.0 * n + 160.0) * n - 336.0) * n - 664.0) * n - linear) * n - 24.0
    }
}

/// Optimal basis quantum for one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaSolution {
    pub n: usize,
    pub hbar_omega_n: f64,
    /// u³ − (ħω)²u − 24bκ²g(n) at the returned root.
    pub residual: f64,
    /// d⟨H⟩/du at the returned root.
    pub stationarity: f64,
}

impl OmegaSolution {
    /// ½mΩₙ² in eV Å⁻².
    pub fn stiffness(&self, spec: &AnharmonicSpec) -> f64 {
        spec.stiffness_for(self.hbar_omega_n)
    }
}

fn level_weight(n: usize) -> f64 {
    let n = n as f64;
    (2.0 * n * n + 2.0 * n + 1.0) / (2.0 * n + 1.0)
}

fn cubic_constant(spec: &AnharmonicSpec, n: usize) -> f64 {
    let kappa = spec.kappa();
    24.0 * spec.quartic_b() * kappa * kappa * level_weight(n)
}

fn cubic_residual(spec: &AnharmonicSpec, n: usize, u: f64) -> f64 {
    let hw = spec.hbar_omega();
    u * u * u - hw * hw * u - cubic_constant(spec, n)
}

/// d⟨n_Ω|H|n_Ω⟩/du in closed form.
fn expectation_slope(spec: &AnharmonicSpec, n: usize, u: f64) -> f64 {
    (2.0 * n as f64 + 1.0) / (4.0 * u * u * u) * cubic_residual(spec, n, u)
}

/// Positive root of the level-n stationarity cubic.
pub fn solve_omega(spec: &AnharmonicSpec, n: usize) -> OmegaSolution {
    let hw = spec.hbar_omega();
    let c = cubic_constant(spec, n);
    let u = if c == 0.0 {
        hw
    } else {
        let f = |u: f64| u * u * u - hw * hw * u - c;
        let mut lo = hw; // f(ħω) = −c < 0
        let mut hi = 1.5 * hw.max(c.cbrt());
        while f(hi) <= 0.0 {
            hi *= 2.0;
        }
        let mut u = hi;
        for _ in 0..200 {
            let fu = f(u);
            if fu == 0.0 {
                break;
            }
            if fu > 0.0 {
                hi = u;
            } else {
                lo = u;
            }
            let step = fu / (3.0 * u * u - hw * hw);
            let mut next = u - step;
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if (next - u).abs() <= 4.0 * f64::EPSILON * u {
                u = next;
                break;
            }
            u = next;
        }
        u
    };
    OmegaSolution {
        n,
        hbar_omega_n: u,
        residual: cubic_residual(spec, n, u),
        stationarity: expectation_slope(spec, n, u),
    }
}

fn check_quantum(u: f64) -> Result<()> {
    if u.is_finite() && u > 0.0 {
        Ok(())
    } else {
        Err(Error::domain("u", format!("basis quantum must be > 0, got {u}")))
    }
}

fn expectation_unchecked(spec: &AnharmonicSpec, n: usize, u: f64) -> f64 {
    let hw = spec.hbar_omega();
    let kappa = spec.kappa();
    let nf = n as f64;
    let beta = spec.quartic_b() * kappa * kappa / (u * u);
    u * (nf + 0.5) - (u * u - hw * hw) / (4.0 * u) * (2.0 * nf + 1.0)
        + 3.0 * beta * (2.0 * nf * nf + 2.0 * nf + 1.0)
}

/// ⟨n_Ω|H|n_Ω⟩ for basis quantum `u`; the variational energy when u = ħΩₙ.
pub fn energy_first_order(spec: &AnharmonicSpec, n: usize, u: f64) -> Result<f64> {
    check_quantum(u)?;
    Ok(expectation_unchecked(spec, n, u))
}

/// Σₖ |⟨k|H′|n⟩|² / (u(n − k)), over the at most four nonzero couplings.
pub fn second_order_sum(spec: &AnharmonicSpec, n: usize, u: f64) -> Result<f64> {
    check_quantum(u)?;
    let basis = OscBasis::for_spec(spec, u)?;
    let sum = [n.checked_sub(4), n.checked_sub(2), Some(n + 2), Some(n + 4)]
        .into_iter()
        .flatten()
        .map(|k| {
            let h = hprime_element(spec, &basis, k, n);
            h * h / (u * (n as f64 - k as f64))
        })
        .sum();
    Ok(sum)
}

/// On-shell closed form of the second-order correction with the default polynomial.
pub fn second_order_closed_form(spec: &AnharmonicSpec, n: usize, u: f64) -> Result<f64> {
    second_order_closed_form_with(spec, n, u, ClosedForm::Corrected)
}

/// The closed form is derived using the stationarity cubic, so `u` must be
/// its root to 10⁻⁸ relative.
pub fn second_order_closed_form_with(
    spec: &AnharmonicSpec,
    n: usize,
    u: f64,
    form: ClosedForm,
) -> Result<f64> {
    check_quantum(u)?;
    let rel = cubic_residual(spec, n, u).abs() / (u * u * u);
    if rel > 1e-8 {
        return Err(Error::domain(
            "u",
            format!("closed form needs u on the stationarity root; relative residual {rel:.3e}"),
        ));
    }
    let kappa = spec.kappa();
    let beta = spec.quartic_b() * kappa * kappa / (u * u);
    let odd = 2.0 * n as f64 + 1.0;
    Ok(beta * beta / (4.0 * u) * form.polynomial(n) / (odd * odd))
}

/// Variational energy of level n (first order at ħΩₙ).
pub fn energy_variational(spec: &AnharmonicSpec, n: usize) -> LevelResult {
    let u = solve_omega(spec, n).hbar_omega_n;
    LevelResult::single(n, u, expectation_unchecked(spec, n, u), Method::Variational)
}

/// Variational energy plus the closed-form second-order correction at ħΩₙ.
pub fn energy_present(spec: &AnharmonicSpec, n: usize) -> Result<LevelResult> {
    energy_present_with(spec, n, ClosedForm::Corrected)
}

pub fn energy_present_with(spec: &AnharmonicSpec, n: usize, form: ClosedForm) -> Result<LevelResult> {
    let u = solve_omega(spec, n).hbar_omega_n;
    let first = energy_first_order(spec, n, u)?;
    let second = second_order_closed_form_with(spec, n, u, form)?;
    Ok(LevelResult::perturbative(n, u, first, second, Method::Present))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtOrder {
    First,
    Second,
}

/// Rayleigh–Schrödinger series in the bare basis (Ω = ω).
pub fn energy_conventional_pt(spec: &AnharmonicSpec, n: usize, order: PtOrder) -> LevelResult {
    let hw = spec.hbar_omega();
    let basis = OscBasis::for_spec(spec, hw).expect("ħω is positive for a valid spec");
    let first = basis.level_energy(n) + spec.quartic_b() * x4_element(&basis, n, n);
    match order {
        PtOrder::First => LevelResult::single(n, hw, first, Method::ConventionalPt1),
        PtOrder::Second => {
            let second = second_order_sum(spec, n, hw).expect("ħω is positive for a valid spec");
            LevelResult::perturbative(n, hw, first, second, Method::ConventionalPt2)
        }
    }
}

/// True when the bare-basis second-order term outweighs the first-order
/// quartic shift, i.e. the series is visibly not converging.
pub fn conventional_pt_diverges(spec: &AnharmonicSpec, n: usize) -> bool {
    let hw = spec.hbar_omega();
    let basis = OscBasis::for_spec(spec, hw).expect("ħω is positive for a valid spec");
    let first_shift = spec.quartic_b() * x4_element(&basis, n, n);
    let second = energy_conventional_pt(spec, n, PtOrder::Second).e_second_corr;
    second.abs() > first_shift.abs()
}

/// One oscillator level seen as a one-parameter family in u = ħΩ.
#[derive(Debug, Clone, Copy)]
pub struct OscillatorLevel {
    pub spec: AnharmonicSpec,
    pub n: usize,
}

impl ParentFamily for OscillatorLevel {
    fn expectation(&self, u: f64) -> f64 {
        expectation_unchecked(&self.spec, self.n, u)
    }

    fn second_order(&self, u: f64) -> f64 {
        second_order_sum(&self.spec, self.n, u).unwrap_or(f64::NAN)
    }

    fn search_interval(&self) -> (f64, f64) {
        let hw = self.spec.hbar_omega();
        (0.5 * hw, 3.0 * hw.max(cubic_constant(&self.spec, self.n).cbrt()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::optimize;

    fn spec(b: f64) -> AnharmonicSpec {
        AnharmonicSpec::with_default_stiffness(b).unwrap()
    }

    /// Hand-expanded on-shell sum: with c₂ = −6bκg/u every coupling is
    /// β·(reduced x⁴ − 6g·reduced x²), giving the four terms below.
    fn on_shell_oracle(n: usize) -> f64 {
        let n = n as f64;
        let g = (2.0 * n * n + 2.0 * n + 1.0) / (2.0 * n + 1.0);
        let up2 = (n + 1.0) * (n + 2.0) * (4.0 * n + 6.0 - 6.0 * g).powi(2);
        let dn2 = n * (n - 1.0) * (4.0 * n - 2.0 - 6.0 * g).powi(2);
        let up4 = (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0);
        let dn4 = n * (n - 1.0) * (n - 2.0) * (n - 3.0);
        // scaled so that correction = β²/(4u) · result/(2n+1)²
        4.0 * (2.0 * n + 1.0).powi(2) * (-up2 / 2.0 + dn2 / 2.0 - up4 / 4.0 + dn4 / 4.0)
    }

    #[test]
    fn corrected_polynomial_matches_hand_expansion() {
        for n in 0..=12 {
            let p = ClosedForm::Corrected.polynomial(n);
            let o = on_shell_oracle(n);
            assert!((p - o).abs() < 1e-9 * o.abs().max(1.0), "n={n}: {p} vs {o}");
        }
    }

    #[test]
    fn printed_polynomial_only_agrees_at_ground_state() {
        assert_eq!(ClosedForm::AsPrinted.polynomial(0), -24.0);
        assert_eq!(ClosedForm::Corrected.polynomial(0), -24.0);
        assert_eq!(ClosedForm::AsPrinted.polynomial(1), -828.0);
        assert_eq!(ClosedForm::Corrected.polynomial(1), -1080.0);
    }

    #[test]
    fn harmonic_limit_root_is_bare_quantum() {
        let s = spec(0.0);
        for n in 0..5 {
            let sol = solve_omega(&s, n);
            assert_eq!(sol.hbar_omega_n, s.hbar_omega());
            assert_eq!(sol.residual, 0.0);
        }
    }

    #[test]
    fn root_residual_within_bound() {
        for b in [1e-4, 0.01, 0.05, 0.25, 1.0, 50.0] {
            for n in 0..15 {
                let sol = solve_omega(&spec(b), n);
                let u = sol.hbar_omega_n;
                assert!(sol.residual.abs() <= 1e-10 * u * u * u, "b={b} n={n}");
                assert!(u >= spec(b).hbar_omega());
            }
        }
    }

    #[test]
    fn table_stiffness_values() {
        let s = spec(0.05);
        assert!((solve_omega(&s, 0).stiffness(&s) - 0.8227827).abs() < 2e-4);
        assert!((solve_omega(&s, 1).stiffness(&s) - 0.990354).abs() < 2e-4);
    }

    #[test]
    fn first_order_rejects_nonpositive_quantum() {
        assert!(energy_first_order(&spec(0.05), 0, 0.0).is_err());
        assert!(energy_first_order(&spec(0.05), 0, -1.0).is_err());
    }

    #[test]
    fn first_order_values() {
        let s = spec(0.05);
        let u = solve_omega(&s, 0).hbar_omega_n;
        assert!((energy_first_order(&s, 0, u).unwrap() - 1.5968858).abs() < 2e-4);
        let s = spec(0.01);
        let u = solve_omega(&s, 0).hbar_omega_n;
        assert!((energy_first_order(&s, 0, u).unwrap() - 1.4333279).abs() < 2e-4);
        let s = spec(0.0);
        for n in 0..6 {
            let e = energy_first_order(&s, n, s.hbar_omega()).unwrap();
            assert!((e - s.hbar_omega() * (n as f64 + 0.5)).abs() < 1e-14);
        }
    }

    #[test]
    fn closed_form_ground_state_is_negative() {
        let s = spec(0.05);
        let u = solve_omega(&s, 0).hbar_omega_n;
        let c = second_order_closed_form(&s, 0, u).unwrap();
        let beta = 0.05 * s.kappa().powi(2) / (u * u);
        assert!((c - (-24.0 * beta * beta / (4.0 * u))).abs() < 1e-15);
        assert!((c - (1.5912088 - 1.5968858)).abs() < 2e-4);
    }

    #[test]
    fn closed_form_rejects_off_shell_quantum() {
        let s = spec(0.05);
        let u = solve_omega(&s, 0).hbar_omega_n;
        assert!(matches!(
            second_order_closed_form(&s, 0, u * 1.001),
            Err(Error::Domain { field: "u", .. })
        ));
    }

    #[test]
    fn bare_sum_at_ground_state() {
        // −42 b² s⁸/ħω from terms 72/(2ħω) + 24/(4ħω)
        let s = spec(0.01);
        let hw = s.hbar_omega();
        let s2 = s.kappa() / hw;
        let expected = -42.0 * 0.01f64.powi(2) * s2.powi(4) / hw;
        let got = second_order_sum(&s, 0, hw).unwrap();
        assert!((got - expected).abs() < 1e-15, "{got} {expected}");
        assert_eq!(second_order_sum(&spec(0.0), 3, spec(0.0).hbar_omega()).unwrap(), 0.0);
        assert_eq!(second_order_sum(&spec(0.0), 0, spec(0.0).hbar_omega()).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_equals_sum_on_shell() {
        for b in [0.001, 0.01, 0.05, 0.25, 1.0] {
            let s = spec(b);
            for n in 0..=12 {
                let u = solve_omega(&s, n).hbar_omega_n;
                let closed = second_order_closed_form(&s, n, u).unwrap();
                let sum = second_order_sum(&s, n, u).unwrap();
                assert!(((closed - sum) / sum).abs() < 1e-10, "b={b} n={n}: {closed} vs {sum}");
            }
        }
    }

    #[test]
    fn present_energies() {
        let r = energy_present(&spec(0.01), 0).unwrap();
        assert!((r.e_total - 1.4327276).abs() < 2e-4);
        assert_eq!(r.method, Method::Present);
        assert_eq!(r.e_total, r.e_first + r.e_second_corr);
        let r = energy_present(&spec(0.25), 0).unwrap();
        assert!((r.e_total - 2.0412648).abs() < 2e-4);
        let printed = energy_present_with(&spec(0.05), 1, ClosedForm::AsPrinted).unwrap();
        assert!((printed.e_total - 5.092412).abs() < 2e-4);
    }

    #[test]
    fn conventional_values() {
        let s = spec(0.05);
        let r1 = energy_conventional_pt(&s, 0, PtOrder::First);
        assert!((r1.e_total - 1.6659633).abs() < 2e-4);
        assert_eq!(r1.e_second_corr, 0.0);
        assert!((energy_conventional_pt(&s, 0, PtOrder::Second).e_total - 1.5279252).abs() < 2e-4);
        assert!((energy_conventional_pt(&s, 1, PtOrder::Second).e_total - 4.484801).abs() < 2e-4);
    }

    #[test]
    fn divergence_flag_only_at_strong_coupling() {
        assert!(!conventional_pt_diverges(&spec(0.01), 0));
        assert!(!conventional_pt_diverges(&spec(0.05), 0));
        assert!(conventional_pt_diverges(&spec(0.25), 0));
        assert!(!conventional_pt_diverges(&spec(0.0), 0));
    }

    #[test]
    fn finite_difference_stationarity_and_minimum() {
        for b in [0.01, 0.05, 0.25] {
            let s = spec(b);
            for n in 0..=10 {
                let u = solve_omega(&s, n).hbar_omega_n;
                let h = 1e-6 * u;
                let e = |x| energy_first_order(&s, n, x).unwrap();
                let slope = (e(u + h) - e(u - h)) / (2.0 * h);
                assert!(slope.abs() <= 1e-6 * (2 * n + 1) as f64 / 2.0, "b={b} n={n} slope={slope}");
                assert!(e(u * 1.001) > e(u) && e(u * 0.999) > e(u), "b={b} n={n}");
            }
        }
    }

    #[test]
    fn generic_engine_agrees_with_cubic_root() {
        for (b, n) in [(0.05, 0), (0.05, 1), (0.25, 3)] {
            let level = OscillatorLevel { spec: spec(b), n };
            let est = optimize(&level, 1e-11);
            let sol = solve_omega(&level.spec, n);
            assert!((est.lambda - sol.hbar_omega_n).abs() < 1e-6, "{} {}", est.lambda, sol.hbar_omega_n);
            let present = energy_present(&level.spec, n).unwrap();
            assert!((est.total() - present.e_total).abs() < 1e-7);
        }
    }

    proptest::proptest! {
        #[test]
        fn ground_second_order_never_positive(b in 0.0f64..2.0, u in 0.1f64..20.0) {
            proptest::prop_assert!(second_order_sum(&spec(b), 0, u).unwrap() <= 0.0);
        }

        #[test]
        fn optimal_quantum_increases_with_b(b in 1e-4f64..2.0, db in 1e-4f64..1.0, n in 0usize..10) {
            let lo = solve_omega(&spec(b), n).hbar_omega_n;
            let hi = solve_omega(&spec(b + db), n).hbar_omega_n;
            proptest::prop_assert!(hi > lo);
            proptest::prop_assert!(lo >= spec(b).hbar_omega());
        }
    }
}
