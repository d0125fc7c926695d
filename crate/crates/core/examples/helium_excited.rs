//! Lowest 1s2s triplet: energy as a function of screening and its minimum.

use varpert::helium::{excited_triplet_energy, optimal_zstar_excited};

fn main() -> varpert::Result<()> {
    let z = 2.0;
    for zs in [1.6, 1.7, 1.8, 1.9, 2.0] {
        println!("Z* = {zs:.2}: E = {:.6} ryd", excited_triplet_energy(zs, z, None)?);
    }
    let best = optimal_zstar_excited(z, None)?;
    println!("optimum Z* = {best:.6}, E = {:.6} ryd", excited_triplet_energy(best, z, None)?);
    Ok(())
}
