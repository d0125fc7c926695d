//! Physical constants, problem definitions and per-level result records.
//!
//! The oscillator works in (eV, Å) and helium in (ryd, a₀). The only bridge
//! the oscillator formulas need is the kinetic scale κ = ħ²/2m, so neither
//! ħ nor m is ever materialized on its own.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ħ²/2mₑ in eV·Å² (CODATA electron value).
pub const KAPPA_EV_A2: f64 = 3.8099821;
/// Rydberg energy in eV.
pub const RYDBERG_EV: f64 = 13.605693;
/// Bohr radius in Å.
pub const BOHR_A: f64 = 0.5291772;

/// Unit-bridging constants. Every field must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    #[serde(rename = "kappa_eV_A2", default = "default_kappa")]
    pub kappa: f64,
    #[serde(rename = "rydberg_eV", default = "default_rydberg")]
    pub rydberg: f64,
    #[serde(rename = "bohr_A", default = "default_bohr")]
    pub bohr_radius: f64,
}

fn default_kappa() -> f64 {
    KAPPA_EV_A2
}

fn default_rydberg() -> f64 {
    RYDBERG_EV
}

fn default_bohr() -> f64 {
    BOHR_A
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            kappa: KAPPA_EV_A2,
            rydberg: RYDBERG_EV,
            bohr_radius: BOHR_A,
        }
    }
}

impl Constants {
    pub fn new(kappa: f64, rydberg: f64, bohr_radius: f64) -> Result<Self> {
        Constants {
            kappa,
            rydberg,
            bohr_radius,
        }
        .validated()
    }

    fn validated(self) -> Result<Self> {
        for (field, value) in [
            ("kappa_eV_A2", self.kappa),
            ("rydberg_eV", self.rydberg),
            ("bohr_A", self.bohr_radius),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::domain(field, format!("must be positive, got {value}")));
            }
        }
        Ok(self)
    }

    /// Parses an override document. Missing keys keep their defaults.
    pub fn from_json_str(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&text)
            .map_err(|source| Error::Json {
                path: path.to_path_buf(),
                source,
            })?
            .validated()
    }
}

/// H = p²/2m + k·x² + b·x⁴ with k = mω²/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnharmonicSpec {
    stiffness_k: f64,
    quartic_b: f64,
    constants: Constants,
}

impl AnharmonicSpec {
    /// `k` in eV Å⁻², `b` in eV Å⁻⁴.
    pub fn new(k: f64, b: f64, constants: Constants) -> Result<Self> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::domain("stiffness_k", format!("must be > 0, got {k}")));
        }
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::domain("quartic_b", format!("must be >= 0, got {b}")));
        }
        let constants = constants.validated()?;
        Ok(AnharmonicSpec {
            stiffness_k: k,
            quartic_b: b,
            constants,
        })
    }

    /// The oscillator used throughout the tables: mω²/2 = 0.5 eV Å⁻².
    pub fn with_default_stiffness(b: f64) -> Result<Self> {
        Self::new(0.5, b, Constants::default())
    }

    pub fn stiffness_k(&self) -> f64 {
        self.stiffness_k
    }

    pub fn quartic_b(&self) -> f64 {
        self.quartic_b
    }

    pub fn kappa(&self) -> f64 {
        self.constants.kappa
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    /// ħω = 2√(κk).
    pub fn hbar_omega(&self) -> f64 {
        2.0 * (self.constants.kappa * self.stiffness_k).sqrt()
    }

    /// The stiffness ½mΩ² of a harmonic well whose quantum is `hbar_big_omega`.
    pub fn stiffness_for(&self, hbar_big_omega: f64) -> f64 {
        hbar_big_omega * hbar_big_omega / (4.0 * self.constants.kappa)
    }
}

/// Free-function form of [`AnharmonicSpec::new`].
pub fn make_anharmonic_spec(k: f64, b: f64, constants: Constants) -> Result<AnharmonicSpec> {
    AnharmonicSpec::new(k, b, constants)
}

pub fn hbar_omega(spec: &AnharmonicSpec) -> f64 {
    spec.hbar_omega()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Variational,
    Present,
    ConventionalPt1,
    ConventionalPt2,
    Exact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Variational => "variational",
            Method::Present => "present",
            Method::ConventionalPt1 => "conventional_pt1",
            Method::ConventionalPt2 => "conventional_pt2",
            Method::Exact => "exact",
        };
        f.write_str(s)
    }
}

/// One energy level evaluated by one method.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelResult {
    pub n: usize,
    pub hbar_omega_n: f64,
    pub e_first: f64,
    pub e_second_corr: f64,
    pub e_total: f64,
    pub method: Method,
}

impl LevelResult {
    pub(crate) fn perturbative(
        n: usize,
        hbar_omega_n: f64,
        e_first: f64,
        e_second_corr: f64,
        method: Method,
    ) -> Self {
        LevelResult {
            n,
            hbar_omega_n,
            e_first,
            e_second_corr,
            e_total: e_first + e_second_corr,
            method,
        }
    }

    pub(crate) fn single(n: usize, hbar_omega_n: f64, energy: f64, method: Method) -> Self {
        LevelResult {
            n,
            hbar_omega_n,
            e_first: energy,
            e_second_corr: 0.0,
            e_total: energy,
            method,
        }
    }
}
