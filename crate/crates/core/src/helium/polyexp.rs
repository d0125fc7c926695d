//! Radial functions of the form Σⱼ cⱼ rʲ e^(−γr) and their exact integrals.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PolyExp {
    /// (coefficient, power) pairs, powers ≥ 0.
    pub terms: Vec<(f64, u32)>,
    pub gamma: f64,
}

/// k!/γ^(k+1) = ∫₀^∞ rᵏ e^(−γr) dr, accumulated as a product to stay in range.
pub(crate) fn factorial_over_power(k: u32, gamma: f64) -> f64 {
    (1..=k).fold(1.0 / gamma, |acc, i| acc * i as f64 / gamma)
}

/// Unevaluated sum hi + lo. Hydrogenic moments cancel across terms of size
/// ~10⁵, so plain f64 accumulation leaves ~10⁻¹¹ residue in orthogonality.
#[derive(Debug, Clone, Copy)]
struct Dd(f64, f64);

impl Dd {
    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd(s, (a - (s - bb)) + (b - bb))
    }

    fn add(self, y: Dd) -> Dd {
        let s = Dd::two_sum(self.0, y.0);
        Dd::two_sum(s.0, s.1 + self.1 + y.1)
    }

    fn mul(self, y: f64) -> Dd {
        let p = self.0 * y;
        Dd::two_sum(p, self.0.mul_add(y, -p) + self.1 * y)
    }

    fn div(self, y: f64) -> Dd {
        let q = self.0 / y;
        let r = self.add(Dd(q, 0.0).mul(-y));
        Dd::two_sum(q, r.0 / y)
    }

    fn factorial_over_power(k: u32, gamma: f64) -> Dd {
        (1..=k).fold(Dd(1.0, 0.0).div(gamma), |acc, i| acc.mul(f64::from(i)).div(gamma))
    }
}

/// Σ a·b·(q+p)!/γ^(q+p+1) over (a, b, q).
fn compensated_moment(pairs: impl Iterator<Item = (f64, f64, u32)>, p: i32, gamma: f64) -> Result<f64> {
    let mut sum = Dd(0.0, 0.0);
    for (a, b, q) in pairs {
        let k = q as i32 + p;
        if k < 0 {
            return Err(Error::domain("p", format!("power r^{k} is not integrable at the origin")));
        }
        sum = sum.add(Dd::factorial_over_power(k as u32, gamma).mul(a).mul(b));
    }
    Ok(sum.0 + sum.1)
}

impl PolyExp {
    pub fn new(terms: Vec<(f64, u32)>, gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::domain("gamma", format!("decay rate must be > 0, got {gamma}")));
        }
        Ok(PolyExp { terms, gamma })
    }

    pub fn eval(&self, r: f64) -> f64 {
        let poly: f64 = self.terms.iter().map(|&(c, p)| c * r.powi(p as i32)).sum();
        poly * (-self.gamma * r).exp()
    }

    /// Pointwise product; decay rates add.
    pub fn mul(&self, other: &PolyExp) -> PolyExp {
        let max_power = self
            .terms
            .iter()
            .chain(&other.terms)
            .map(|&(_, p)| p)
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = vec![0.0; 2 * max_power + 1];
        for &(a, p) in &self.terms {
            for &(b, q) in &other.terms {
                coeffs[(p + q) as usize] += a * b;
            }
        }
        PolyExp {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0.0)
                .map(|(p, c)| (c, p as u32))
                .collect(),
            gamma: self.gamma + other.gamma,
        }
    }

    /// ∫₀^∞ rᵖ f(r) dr. `p` may be negative as long as every resulting power is ≥ 0.
    pub fn integral(&self, p: i32) -> Result<f64> {
        compensated_moment(self.terms.iter().map(|&(c, q)| (c, 1.0, q)), p, self.gamma)
    }
}

/// ∫₀^∞ rᵖ f(r) g(r) dr, summed over term pairs without first merging powers.
pub fn polyexp_moment(f: &PolyExp, g: &PolyExp, p: i32) -> Result<f64> {
    let pairs = f
        .terms
        .iter()
        .flat_map(|&(a, i)| g.terms.iter().map(move |&(b, j)| (a, b, i + j)));
    compensated_moment(pairs, p, f.gamma + g.gamma)
}
