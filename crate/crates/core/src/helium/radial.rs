//! Hydrogenic radial functions and the radial integrals built from them.

use crate::error::{Error, Result};
use crate::helium::polyexp::{factorial_over_power, polyexp_moment, PolyExp};

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn binomial(n: u32, k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * f64::from(n - k + i) / f64::from(i))
}

/// Normalized R_nl(r) for nuclear charge `z_star`, r in a₀.
pub fn hydrogenic_radial(n: u32, l: u32, z_star: f64) -> Result<PolyExp> {
    if n < 1 {
        return Err(Error::domain("n", "principal quantum number must be >= 1"));
    }
    if l >= n {
        return Err(Error::domain("l", format!("need l < n, got l = {l}, n = {n}")));
    }
    if !(z_star.is_finite() && z_star > 0.0) {
        return Err(Error::domain("z_star", format!("must be > 0, got {z_star}")));
    }
    let nf = f64::from(n);
    let scale = 2.0 * z_star / nf;
    let norm = (scale.powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt();
    let degree = n - l - 1;
    let alpha = 2 * l + 1;
    // (ρ)^l · L^(2l+1)_(n−l−1)(ρ), ρ = scale·r
    let terms = (0..=degree)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let c = sign * binomial(degree + alpha, degree - i) / factorial(i);
            (norm * c * scale.powi((l + i) as i32), l + i)
        })
        .collect();
    PolyExp::new(terms, z_star / nf)
}

/// X_n = ∫ r² R_n0 (1/r) R_10 dr at common charge `z_star`, in 1/a₀.
pub fn x_integral(n: u32, z_star: f64) -> Result<f64> {
    let rn = hydrogenic_radial(n, 0, z_star)?;
    let r1 = hydrogenic_radial(1, 0, z_star)?;
    polyexp_moment(&rn, &r1, 1)
}

/// Rᵏ(ab; cd) = ∫∫ a(r₁) b(r₂) · r_<ᵏ / r_>ᵏ⁺¹ · c(r₁) d(r₂) · r₁² r₂² dr₁ dr₂.
///
/// Evaluated in closed form: the inner integral is split at r₂ = r₁ into
/// incomplete-gamma pieces, each a finite sum of PolyExp terms.
pub fn slater_radial(k: u32, a: &PolyExp, b: &PolyExp, c: &PolyExp, d: &PolyExp) -> Result<f64> {
    let inner = a.mul(c);
    let outer = b.mul(d);
    let k = k as i32;
    let (alpha, beta) = (inner.gamma, outer.gamma);
    let total = alpha + beta;
    let mut sum = 0.0;
    for &(fi, i) in &inner.terms {
        let i = i as i32;
        for &(gj, j) in &outer.terms {
            let j = j as i32;
            // r₂ < r₁:  r₁^(1−k+i) e^(−αr₁) · ∫₀^r₁ r₂^(k+2+j) e^(−βr₂)
            let m = k + 2 + j;
            let p = 1 - k + i;
            // r₂ > r₁:  r₁^(2+k+i) e^(−αr₁) · ∫_r₁^∞ r₂^(1−k+j) e^(−βr₂)
            let q = 1 - k + j;
            if p < 0 || q < 0 {
                return Err(Error::domain(
                    "k",
                    format!("multipole {k} too high for the orbital powers r^{i}, r^{j}"),
                ));
            }
            let (m, p, q) = (m as u32, p as u32, q as u32);

            let mut partial = 0.0;
            let mut w = 1.0; // βˢ/s!
            for s in 0..=m {
                if s > 0 {
                    w *= beta / f64::from(s);
                }
                partial += w * factorial_over_power(p + s, total);
            }
            let lower = factorial_over_power(m, beta) * (factorial_over_power(p, alpha) - partial);

            let mut upper = 0.0;
            let mut w = 1.0;
            let top = (2 + k + i) as u32;
            for s in 0..=q {
                if s > 0 {
                    w *= beta / f64::from(s);
                }
                upper += w * factorial_over_power(top + s, total);
            }
            let upper = factorial_over_power(q, beta) * upper;

            sum += fi * gj * (lower + upper);
        }
    }
    Ok(sum)
}
