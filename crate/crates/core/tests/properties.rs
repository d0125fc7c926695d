use proptest::prelude::*;

use varpert::anharmonic::{
    energy_present, energy_variational, second_order_closed_form, second_order_sum, solve_omega,
};
use varpert::exact::{diag_eigenvalues, shoot_eigenvalue, ShootingConfig};
use varpert::helium::{hydrogenic_radial, polyexp_moment, slater_radial, Integrals};
use varpert::model::{AnharmonicSpec, Constants};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_matches_sum(b in 1e-3f64..1.0, k in 0.1f64..2.0, n in 0usize..=12) {
        let spec = AnharmonicSpec::new(k, b, Constants::default()).unwrap();
        let u = solve_omega(&spec, n).hbar_omega_n;
        let closed = second_order_closed_form(&spec, n, u).unwrap();
        let sum = second_order_sum(&spec, n, u).unwrap();
        prop_assert!(((closed - sum) / sum).abs() < 1e-10);
    }

    #[test]
    fn variational_bounds_lowest_state_of_each_parity(b in 1e-3f64..1.0, n in 0usize..2) {
        let spec = AnharmonicSpec::with_default_stiffness(b).unwrap();
        let exact = diag_eigenvalues(&spec, 100, solve_omega(&spec, 0).hbar_omega_n, 2).unwrap()[n];
        prop_assert!(energy_variational(&spec, n).e_total > exact);
    }

    #[test]
    fn screening_scales_integrals(z in 0.3f64..4.0, n in 2u32..=6, l in 0u32..2) {
        prop_assume!(l < n);
        let a = Integrals::new(z, None).unwrap();
        let b = Integrals::new(2.0 * z, None).unwrap();
        prop_assert!((b.x(n).unwrap() - 2.0 * a.x(n).unwrap()).abs() < 1e-12);
        prop_assert!((b.y(n, n + 1, l).unwrap() - 2.0 * a.y(n, n + 1, l).unwrap()).abs() < 1e-12);
        prop_assert!((a.x(1).unwrap() - z).abs() < 1e-12);
        prop_assert!((a.y(1, 1, 0).unwrap() - 0.625 * z).abs() < 1e-12);
    }

    #[test]
    fn orthonormal_at_any_charge(z in 0.3f64..4.0, l in 0u32..4, n in 1u32..=7, np in 1u32..=7) {
        prop_assume!(l < n && l < np);
        let a = hydrogenic_radial(n, l, z).unwrap();
        let b = hydrogenic_radial(np, l, z).unwrap();
        let want = if n == np { 1.0 } else { 0.0 };
        prop_assert!((polyexp_moment(&a, &b, 2).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn slater_relabel_symmetry(z in 0.5f64..3.0, n in 2u32..=5, np in 2u32..=5, k in 0u32..2) {
        prop_assume!(k < n && k < np);
        let a = hydrogenic_radial(n, k, z).unwrap();
        let b = hydrogenic_radial(np, k, z).unwrap();
        let s = hydrogenic_radial(1, 0, z).unwrap();
        let fwd = slater_radial(k, &a, &b, &s, &s).unwrap();
        let swapped = slater_radial(k, &b, &a, &s, &s).unwrap();
        prop_assert!((fwd - swapped).abs() < 1e-12);
    }
}

#[test]
fn shooting_matches_diagonalization_on_grid() {
    let cfg = ShootingConfig::default();
    for b in [0.001, 0.1, 1.0] {
        let spec = AnharmonicSpec::with_default_stiffness(b).unwrap();
        let diag = diag_eigenvalues(&spec, 120, solve_omega(&spec, 0).hbar_omega_n, 3).unwrap();
        for (n, d) in diag.iter().enumerate() {
            let e = shoot_eigenvalue(&spec, n, &cfg).unwrap();
            assert!((e - d).abs() < 1e-5, "b={b} n={n}: {e} vs {d}");
        }
    }
}

#[test]
fn present_ground_state_undershoots_exact() {
    for b in [0.01, 0.05, 0.25] {
        let spec = AnharmonicSpec::with_default_stiffness(b).unwrap();
        let exact = diag_eigenvalues(&spec, 120, spec.hbar_omega(), 1).unwrap()[0];
        assert!(energy_present(&spec, 0).unwrap().e_total < exact, "b={b}");
    }
}
