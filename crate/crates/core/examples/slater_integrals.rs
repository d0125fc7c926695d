//! Hydrogenic radial functions and closed-form Slater integrals.

use varpert::helium::{hydrogenic_radial, polyexp_moment, slater_radial, Integrals};

fn main() -> varpert::Result<()> {
    let z = 1.0;
    let s1 = hydrogenic_radial(1, 0, z)?;
    let s2 = hydrogenic_radial(2, 0, z)?;
    println!("⟨1s|1s⟩ = {:.15}", polyexp_moment(&s1, &s1, 2)?);
    println!("⟨1s|2s⟩ = {:.3e}", polyexp_moment(&s1, &s2, 2)?);
    println!("F0(1s1s;1s1s) = {:.12} (5/8 = 0.625)", slater_radial(0, &s1, &s1, &s1, &s1)?);
    println!("J(1s,2s)      = {:.12} (17/81)", slater_radial(0, &s1, &s2, &s1, &s2)?);
    println!("K(1s,2s)      = {:.12} (16/729)", slater_radial(0, &s1, &s1, &s2, &s2)?);

    let ints = Integrals::new(1.6875, None)?;
    println!("\nZ* = 1.6875, ryd:");
    for n in 1..=4 {
        println!("  X{n} = {:.9}", ints.x(n)?);
    }
    for (n, np, l) in [(1, 1, 0), (2, 2, 0), (2, 2, 1), (2, 3, 1), (3, 3, 2)] {
        println!("  Y({n},{np},{l}) = {:.9}", ints.y(n, np, l)?);
    }
    Ok(())
}
