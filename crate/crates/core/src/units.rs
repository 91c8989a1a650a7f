//! Reduced unit system.
//!
//! All computation happens in units where `4πε₀ = 1` and `ħ = 1`, lengths are
//! measured in a scale `L₀` and charges in the elementary charge `e`. That
//! fixes the energy unit to `E₀ = e²/(4πε₀ L₀)` and the (angular) frequency
//! unit to `E₀/ħ`. Polarizabilities become volumes, `α/(4πε₀ L₀³)`.
//!
//! SI values only appear at the boundary; [`UnitSystem::to_reduced`] and
//! [`UnitSystem::from_reduced`] do the conversion.

use core::f64::consts::PI;

use crate::{Error, Result};

/// CODATA 2018 vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.8541878128e-12;
/// CODATA 2018 reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;
/// Exact SI elementary charge, C.
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;
/// Default SI length scale: one ångström.
pub const DEFAULT_LENGTH_SCALE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitMode {
    Reduced,
    SI,
}

/// Physical dimension of a value crossing the unit boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Energy,
    Length,
    /// Angular frequency.
    Frequency,
    Polarizability,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    mode: UnitMode,
    /// Value of `4πε₀` in the active units.
    coulomb_factor: f64,
    /// Value of `ħ` in the active units.
    hbar: f64,
    /// `L₀` in metres (SI mode) or 1.
    length_scale: f64,
}

impl Default for UnitSystem {
    fn default() -> Self {
        UnitSystem::reduced()
    }
}

impl UnitSystem {
    pub const fn reduced() -> Self {
        UnitSystem {
            mode: UnitMode::Reduced,
            coulomb_factor: 1.0,
            hbar: 1.0,
            length_scale: 1.0,
        }
    }

    /// SI boundary with length scale `L₀` in metres.
    pub fn si(length_scale: f64) -> Result<Self> {
        if !(length_scale.is_finite() && length_scale > 0.0) {
            return Err(Error::Domain("length scale must be positive and finite"));
        }
        Ok(UnitSystem {
            mode: UnitMode::SI,
            coulomb_factor: 4.0 * PI * VACUUM_PERMITTIVITY,
            hbar: HBAR,
            length_scale,
        })
    }

    pub fn mode(&self) -> UnitMode {
        self.mode
    }

    pub fn coulomb_factor(&self) -> f64 {
        self.coulomb_factor
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn length_scale(&self) -> f64 {
        self.length_scale
    }

    /// Size of one reduced unit of `kind`, expressed in the active units.
    fn scale(&self, kind: Kind) -> f64 {
        match self.mode {
            UnitMode::Reduced => 1.0,
            UnitMode::SI => {
                let l0 = self.length_scale;
                let energy = ELEMENTARY_CHARGE * ELEMENTARY_CHARGE / (self.coulomb_factor * l0);
                match kind {
                    Kind::Length => l0,
                    Kind::Energy => energy,
                    Kind::Frequency => energy / self.hbar,
                    Kind::Polarizability => self.coulomb_factor * l0 * l0 * l0,
                }
            }
        }
    }

    pub fn to_reduced(&self, value: f64, kind: Kind) -> Result<f64> {
        if !value.is_finite() {
            return Err(Error::Domain("value to convert must be finite"));
        }
        Ok(match self.mode {
            UnitMode::Reduced => value,
            UnitMode::SI => value / self.scale(kind),
        })
    }

    pub fn from_reduced(&self, value: f64, kind: Kind) -> Result<f64> {
        if !value.is_finite() {
            return Err(Error::Domain("value to convert must be finite"));
        }
        Ok(match self.mode {
            UnitMode::Reduced => value,
            UnitMode::SI => value * self.scale(kind),
        })
    }
}
