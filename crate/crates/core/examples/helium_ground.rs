//! Helium ground state: screened variational energy plus the second-order
//! sum over doubly excited configurations, under each enumeration convention.

use varpert::helium::{ground_state, second_order_partial_sums, MRange, PairEnumeration, SumConfig};

fn main() -> varpert::Result<()> {
    let z = 2.0;
    let variants = [
        ("0 ≤ m ≤ l, unique pairs", MRange::Paper, PairEnumeration::Unique),
        ("−l ≤ m ≤ l, unique pairs", MRange::Full, PairEnumeration::Unique),
        ("0 ≤ m ≤ l, ordered pairs", MRange::Paper, PairEnumeration::Ordered),
    ];
    for (name, m_range, pairs) in variants {
        let cfg = SumConfig { n_max: 7, m_range, pairs };
        let r = ground_state(z, &cfg, None)?;
        println!(
            "{name}: Z* {:.4}  E_var {:.6}  E2 {:.6}  total {:.6} ryd",
            r.z_star, r.e_variational, r.e_second, r.e_total
        );
    }
    println!("\nconvergence in n′ (0 ≤ m ≤ l, unique pairs):");
    for (n, v) in second_order_partial_sums(1.6875, z, &SumConfig::default(), None)? {
        println!("  n′ ≤ {n}: {v:.9}");
    }
    Ok(())
}
