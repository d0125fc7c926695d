//! Harmonic-oscillator basis algebra.
//!
//! Everything is expressed through the basis quantum ħΩ and κ, with the
//! length scale s² = ħ/2mΩ = κ/ħΩ.

use crate::band::BandMatrix;
use crate::error::{Error, Result};
use crate::model::AnharmonicSpec;

/// Eigenbasis |n_Ω⟩ of the harmonic parent Hamiltonian p²/2m + ½mΩ²x².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscBasis {
    hbar_big_omega: f64,
    kappa: f64,
}

impl OscBasis {
    pub fn new(hbar_big_omega: f64, kappa: f64) -> Result<Self> {
        if !(hbar_big_omega.is_finite() && hbar_big_omega > 0.0) {
            return Err(Error::domain("hbar_Omega", format!("must be > 0, got {hbar_big_omega}")));
        }
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::domain("kappa", format!("must be > 0, got {kappa}")));
        }
        Ok(OscBasis {
            hbar_big_omega,
            kappa,
        })
    }

    /// Basis of quantum `u` for the given problem's κ.
    pub fn for_spec(spec: &AnharmonicSpec, u: f64) -> Result<Self> {
        Self::new(u, spec.kappa())
    }

    pub fn hbar_big_omega(&self) -> f64 {
        self.hbar_big_omega
    }

    pub fn s2(&self) -> f64 {
        self.kappa / self.hbar_big_omega
    }

    /// ½mΩ² = (ħΩ)²/4κ.
    pub fn stiffness(&self) -> f64 {
        self.hbar_big_omega * self.hbar_big_omega / (4.0 * self.kappa)
    }

    pub fn level_energy(&self, n: usize) -> f64 {
        self.hbar_big_omega * (n as f64 + 0.5)
    }
}

fn ordered(k: usize, n: usize) -> (usize, usize, usize) {
    if k >= n {
        (n, k, k - n)
    } else {
        (k, n, n - k)
    }
}

/// ⟨k|x²|n⟩ divided by s².
pub(crate) fn x2_reduced(k: usize, n: usize) -> f64 {
    let (lo, _, d) = ordered(k, n);
    let m = lo as f64;
    match d {
        0 => 2.0 * m + 1.0,
        2 => ((m + 1.0) * (m + 2.0)).sqrt(),
        _ => 0.0,
    }
}

/// ⟨k|x⁴|n⟩ divided by s⁴.
pub(crate) fn x4_reduced(k: usize, n: usize) -> f64 {
    let (lo, _, d) = ordered(k, n);
    let m = lo as f64;
    match d {
        0 => 6.0 * m * m + 6.0 * m + 3.0,
        2 => (4.0 * m + 6.0) * ((m + 1.0) * (m + 2.0)).sqrt(),
        4 => ((m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0)).sqrt(),
        _ => 0.0,
    }
}

pub fn x2_element(basis: &OscBasis, k: usize, n: usize) -> f64 {
    basis.s2() * x2_reduced(k, n)
}

pub fn x4_element(basis: &OscBasis, k: usize, n: usize) -> f64 {
    let s2 = basis.s2();
    s2 * s2 * x4_reduced(k, n)
}

/// ⟨k|H′|n⟩ for H′ = ½m(ω² − Ω²)x² + b·x⁴.
pub fn hprime_element(spec: &AnharmonicSpec, basis: &OscBasis, k: usize, n: usize) -> f64 {
    // (ħω − ħΩ)(ħω + ħΩ)/4κ vanishes exactly when the basis sits at ω
    let (hw, u) = (spec.hbar_omega(), basis.hbar_big_omega);
    let c2 = (hw - u) * (hw + u) / (4.0 * basis.kappa);
    c2 * x2_element(basis, k, n) + spec.quartic_b() * x4_element(basis, k, n)
}

/// Matrix of the full Hamiltonian in the first `dim` basis states.
pub fn build_hamiltonian(spec: &AnharmonicSpec, basis: &OscBasis, dim: usize) -> Result<BandMatrix> {
    if dim < 8 {
        return Err(Error::domain("dim", format!("need at least 8 basis states, got {dim}")));
    }
    let mut h = BandMatrix::zeros(dim, 4);
    for i in 0..dim {
        h.set(i, i, basis.level_energy(i) + hprime_element(spec, basis, i, i));
        for off in [2, 4] {
            if i >= off {
                h.set(i, i - off, hprime_element(spec, basis, i, i - off));
            }
        }
    }
    Ok(h)
}
