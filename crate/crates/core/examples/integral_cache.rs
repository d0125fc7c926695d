//! Persisting helium integrals between runs.

use varpert::helium::{second_order_correction, IntegralCache, SumConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("varpert-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("integrals.json");

    for pass in ["cold", "warm"] {
        let (cache, status) = IntegralCache::load(&path);
        let e2 = second_order_correction(1.6875, 2.0, &SumConfig::default(), Some(&cache))?;
        println!(
            "{pass}: {status:?}, E2 = {e2:.9}, {} hits, {} misses, {} entries",
            cache.hits(),
            cache.misses(),
            cache.len()
        );
        cache.save(&path)?;
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
