//! Lowest levels of a quartic-perturbed oscillator by every method.
//!
//! cargo run --example anharmonic_levels -- 0.05

use varpert::anharmonic::{energy_conventional_pt, energy_present, energy_variational, solve_omega, PtOrder};
use varpert::exact::{shoot_eigenvalue, ShootingConfig};
use varpert::model::AnharmonicSpec;

fn main() -> varpert::Result<()> {
    let b: f64 = std::env::args().nth(1).map_or(0.05, |s| s.parse().expect("b must be a number"));
    let spec = AnharmonicSpec::with_default_stiffness(b)?;
    println!("b = {b} eV Å⁻⁴, ħω = {:.7} eV", spec.hbar_omega());
    println!("{:>2} {:>10} {:>10} {:>10} {:>10} {:>10}", "n", "ħΩn", "PT2", "var", "present", "exact");
    let cfg = ShootingConfig::default();
    for n in 0..4 {
        let omega = solve_omega(&spec, n);
        println!(
            "{n:>2} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            omega.hbar_omega_n,
            energy_conventional_pt(&spec, n, PtOrder::Second).e_total,
            energy_variational(&spec, n).e_total,
            energy_present(&spec, n)?.e_total,
            shoot_eigenvalue(&spec, n, &cfg)?,
        );
    }
    Ok(())
}
