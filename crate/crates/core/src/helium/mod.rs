//! Two-electron atom in a screened-charge hydrogenic basis, energies in ryd
//! and lengths in a₀ (e²/a₀ = 2 ryd).

mod cache;
mod polyexp;
mod radial;

pub use cache::{cache_key, IntegralCache, IntegralKind, LoadStatus, CACHE_VERSION};
pub use polyexp::{polyexp_moment, PolyExp};
pub use radial::{hydrogenic_radial, slater_radial, x_integral};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scheme::ParentFamily;

/// e² in ryd·a₀.
const E2: f64 = 2.0;

/// Which magnetic substates enter the second-order sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MRange {
    /// 0 ≤ m ≤ l only.
    #[default]
    Paper,
    /// −l ≤ m ≤ l for distinct shells; for n = n′ the pair (m, −m) is one state.
    Full,
}

/// How (n, n′) shell pairs are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairEnumeration {
    /// n ≤ n′: each symmetrized two-electron state once.
    #[default]
    Unique,
    /// Both orderings of n ≠ n′; counts those states twice.
    Ordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumConfig {
    pub n_max: u32,
    pub m_range: MRange,
    pub pairs: PairEnumeration,
}

impl Default for SumConfig {
    fn default() -> Self {
        SumConfig {
            n_max: 7,
            m_range: MRange::Paper,
            pairs: PairEnumeration::Unique,
        }
    }
}

/// Intermediate state |n l m; n′ l −m⟩, spatially symmetrized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeliumChannel {
    pub n: u32,
    pub n_prime: u32,
    pub l: u32,
    pub m: i32,
    pub a: f64,
}

impl HeliumChannel {
    pub fn new(n: u32, n_prime: u32, l: u32, m: i32) -> Result<Self> {
        if n < 1 || n_prime < n {
            return Err(Error::domain("n", format!("need 1 <= n <= n', got ({n}, {n_prime})")));
        }
        if (n, n_prime) == (1, 1) {
            return Err(Error::domain("n", "(1, 1) is the unperturbed state"));
        }
        if l >= n {
            return Err(Error::domain("l", format!("need l < n = {n}, got {l}")));
        }
        if m.unsigned_abs() > l {
            return Err(Error::domain("m", format!("need |m| <= l = {l}, got {m}")));
        }
        let a = if n == n_prime && m == 0 {
            0.5
        } else {
            std::f64::consts::FRAC_1_SQRT_2
        };
        Ok(HeliumChannel { n, n_prime, l, m, a })
    }

    /// −Z*²(2 − 1/n² − 1/n′²), ryd.
    pub fn denominator(&self, z_star: f64) -> f64 {
        let inv2 = |k: u32| 1.0 / f64::from(k * k);
        -z_star * z_star * (2.0 - inv2(self.n) - inv2(self.n_prime))
    }
}

/// Every channel of the sum, each paired with its multiplicity.
pub fn channels(cfg: &SumConfig) -> Vec<(HeliumChannel, f64)> {
    let mut out = Vec::new();
    for n_prime in 2..=cfg.n_max {
        for n in 1..=n_prime {
            let weight = match cfg.pairs {
                PairEnumeration::Ordered if n != n_prime => 2.0,
                _ => 1.0,
            };
            for l in 0..n {
                let l_i = l as i32;
                let m_lo = match cfg.m_range {
                    MRange::Full if n != n_prime => -l_i,
                    _ => 0,
                };
                for m in m_lo..=l_i {
                    let ch = HeliumChannel::new(n, n_prime, l, m).expect("enumeration respects invariants");
                    out.push((ch, weight));
                }
            }
        }
    }
    out
}

/// Radial integrals at one charge, optionally memoized.
pub struct Integrals<'a> {
    z_star: f64,
    cache: Option<&'a IntegralCache>,
}

impl<'a> Integrals<'a> {
    pub fn new(z_star: f64, cache: Option<&'a IntegralCache>) -> Result<Self> {
        if !(z_star.is_finite() && z_star > 0.0) {
            return Err(Error::domain("z_star", format!("must be > 0, got {z_star}")));
        }
        Ok(Integrals { z_star, cache })
    }

    fn memo(&self, kind: IntegralKind, n: u32, np: u32, l: u32, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
        match self.cache {
            Some(c) => c.get_or_compute(cache_key(kind, n, np, l, self.z_star), f),
            None => f(),
        }
    }

    pub fn x(&self, n: u32) -> Result<f64> {
        self.memo(IntegralKind::X, n, 1, 0, || x_integral(n, self.z_star))
    }

    /// Y_{nn′l} = Rˡ(R_nl, R_n′l; R₁₀, R₁₀).
    pub fn y(&self, n: u32, n_prime: u32, l: u32) -> Result<f64> {
        self.memo(IntegralKind::Y, n, n_prime, l, || {
            let s = hydrogenic_radial(1, 0, self.z_star)?;
            let a = hydrogenic_radial(n, l, self.z_star)?;
            let b = hydrogenic_radial(n_prime, l, self.z_star)?;
            slater_radial(l, &a, &b, &s, &s)
        })
    }

    /// Direct Coulomb integral of the 1s2s pair, 1/a₀.
    pub fn direct_1s2s(&self) -> Result<f64> {
        self.memo(IntegralKind::Direct, 1, 2, 0, || {
            let (s1, s2) = (hydrogenic_radial(1, 0, self.z_star)?, hydrogenic_radial(2, 0, self.z_star)?);
            slater_radial(0, &s1, &s2, &s1, &s2)
        })
    }

    /// Exchange integral of the 1s2s pair, 1/a₀.
    pub fn exchange_1s2s(&self) -> Result<f64> {
        self.memo(IntegralKind::Exchange, 1, 2, 0, || {
            let (s1, s2) = (hydrogenic_radial(1, 0, self.z_star)?, hydrogenic_radial(2, 0, self.z_star)?);
            slater_radial(0, &s1, &s2, &s2, &s1)
        })
    }
}

fn check_charges(z_star: f64, z: f64) -> Result<()> {
    if !(z_star.is_finite() && z_star > 0.0) {
        return Err(Error::domain("z_star", format!("must be > 0, got {z_star}")));
    }
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::domain("z", format!("must be > 0, got {z}")));
    }
    Ok(())
}

/// ⟨1s²|H|1s²⟩ at screened charge `z_star`, nuclear charge `z`.
pub fn variational_ground_energy(z_star: f64, z: f64) -> f64 {
    -(4.0 * z_star * z - 2.0 * z_star * z_star - 1.25 * z_star)
}

/// Same expectation assembled from the radial integrals, as a cross-check.
pub fn variational_ground_energy_from_integrals(ints: &Integrals<'_>, z: f64) -> Result<f64> {
    let zs = ints.z_star;
    Ok(2.0 * zs * zs - 2.0 * z * E2 * ints.x(1)? + E2 * ints.y(1, 1, 0)?)
}

pub fn optimal_zstar_ground(z: f64) -> f64 {
    z - 5.0 / 16.0
}

/// |⟨channel|H₁′ + H₂′|1s²⟩|², ryd².
pub fn channel_amplitude_sq(ch: &HeliumChannel, ints: &Integrals<'_>, z: f64) -> Result<f64> {
    let one_body = if ch.l == 0 && ch.m == 0 && ch.n == 1 {
        -2.0 * ch.a * (z - ints.z_star) * E2 * ints.x(ch.n_prime)?
    } else {
        0.0
    };
    let sign = if ch.m % 2 == 0 { 1.0 } else { -1.0 };
    let two_body = 2.0 * ch.a * E2 * sign / f64::from(2 * ch.l + 1) * ints.y(ch.n, ch.n_prime, ch.l)?;
    let amp = one_body + two_body;
    Ok(amp * amp)
}

/// Second-order correction to the ground state, ryd.
pub fn second_order_correction(z_star: f64, z: f64, cfg: &SumConfig, cache: Option<&IntegralCache>) -> Result<f64> {
    Ok(second_order_partial_sums(z_star, z, cfg, cache)?
        .last()
        .map(|&(_, v)| v)
        .unwrap_or(0.0))
}

/// Running totals of the sum truncated at n′ = 2, 3, …, n_max.
pub fn second_order_partial_sums(
    z_star: f64,
    z: f64,
    cfg: &SumConfig,
    cache: Option<&IntegralCache>,
) -> Result<Vec<(u32, f64)>> {
    check_charges(z_star, z)?;
    if cfg.n_max < 2 {
        return Err(Error::domain("n_max", format!("must be >= 2, got {}", cfg.n_max)));
    }
    let ints = Integrals::new(z_star, cache)?;
    let mut sums = Vec::new();
    let mut total = 0.0;
    let mut current = 2;
    for (ch, weight) in channels(cfg) {
        if ch.n_prime != current {
            sums.push((current, total));
            current = ch.n_prime;
        }
        total += weight * channel_amplitude_sq(&ch, &ints, z)? / ch.denominator(z_star);
    }
    sums.push((current, total));
    Ok(sums)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeliumResult {
    pub z_star: f64,
    pub e_variational: f64,
    pub e_second: f64,
    pub e_total: f64,
    pub n_max: u32,
}

/// Optimized screening plus second-order correction for nuclear charge `z`.
pub fn ground_state(z: f64, cfg: &SumConfig, cache: Option<&IntegralCache>) -> Result<HeliumResult> {
    if !(z.is_finite() && z >= 1.0) {
        return Err(Error::domain("z", format!("must be >= 1, got {z}")));
    }
    let z_star = optimal_zstar_ground(z);
    let e_variational = variational_ground_energy(z_star, z);
    let e_second = second_order_correction(z_star, z, cfg, cache)?;
    Ok(HeliumResult {
        z_star,
        e_variational,
        e_second,
        e_total: e_variational + e_second,
        n_max: cfg.n_max,
    })
}

/// ⟨1s2s, spatially antisymmetric|H⟩ at common charge `z_star`, ryd.
pub fn excited_triplet_energy(z_star: f64, z: f64, cache: Option<&IntegralCache>) -> Result<f64> {
    check_charges(z_star, z)?;
    let ints = Integrals::new(z_star, cache)?;
    let j_minus_k = ints.direct_1s2s()? - ints.exchange_1s2s()?;
    Ok(1.25 * z_star * z_star - 2.5 * z * z_star + E2 * j_minus_k)
}

/// The energy is quadratic in Z* with J − K linear, so the optimum is closed form.
pub fn optimal_zstar_excited(z: f64, cache: Option<&IntegralCache>) -> Result<f64> {
    let ints = Integrals::new(1.0, cache)?;
    let slope = E2 * (ints.direct_1s2s()? - ints.exchange_1s2s()?);
    Ok(z - slope / 2.5)
}

/// Ground state as a one-parameter family in Z*, for the generic optimizer.
pub struct HeliumGround<'a> {
    pub z: f64,
    pub sum: SumConfig,
    pub cache: Option<&'a IntegralCache>,
}

impl ParentFamily for HeliumGround<'_> {
    fn expectation(&self, z_star: f64) -> f64 {
        variational_ground_energy(z_star, self.z)
    }

    fn second_order(&self, z_star: f64) -> f64 {
        second_order_correction(z_star, self.z, &self.sum, self.cache).unwrap_or(f64::NAN)
    }

    fn search_interval(&self) -> (f64, f64) {
        (0.1, self.z + 1.0)
    }
}
