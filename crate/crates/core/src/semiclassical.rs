//! Fluctuating-dipoles model.
//!
//! The atom is a charge bound harmonically to a fixed nucleus, oscillating
//! along a fixed direction at angle θ to `ẑ`. The fields of its own images
//! act back on the electron and shift the oscillator frequency; the change of
//! zero-point energy `ħ(ω - ω₀)/2` is read as the interaction potential. The
//! potentials keep only the leading term of that shift, with `cos²θ`
//! replaced by its isotropic average `1/3`.

use crate::electrostatics::EnergyBreakdown;
use crate::geometry::SphereGeometry;
use crate::math::{cube, require_positive};
use crate::{Error, Result};

/// Isotropic average of `cos²θ`.
pub const ISOTROPIC_COS2: f64 = 1.0 / 3.0;

/// Atomic parameters in reduced units (`ħ = 1`, `4πε₀ = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomModel {
    oscillator: Option<(f64, f64)>,
    omega0: f64,
    alpha: f64,
    dx2: f64,
}

impl AtomModel {
    /// Harmonic-oscillator atom with charge `e`, mass `m` and natural
    /// frequency `omega0`. The polarizability is `e²/(m ω₀²)` and the dipole
    /// variance follows from the dominant-transition closure.
    pub fn from_oscillator(e: f64, m: f64, omega0: f64) -> Result<Self> {
        let alpha = polarizability_from_oscillator(e, m, omega0)?;
        Ok(AtomModel {
            oscillator: Some((e, m)),
            omega0,
            alpha,
            dx2: 0.5 * omega0 * alpha,
        })
    }

    /// Atom with a single dominant transition at `omega0` and static
    /// polarizability `alpha`; `⟨0|d_x²|0⟩ = ħω₀α/2`.
    pub fn dominant_transition(alpha: f64, omega0: f64) -> Result<Self> {
        require_positive(alpha, "polarizability must be positive")?;
        require_positive(omega0, "transition frequency must be positive")?;
        Ok(AtomModel {
            oscillator: None,
            omega0,
            alpha,
            dx2: 0.5 * omega0 * alpha,
        })
    }

    /// Atom with independently specified variance (no closure asserted).
    pub fn new(alpha: f64, omega0: f64, dx2: f64) -> Result<Self> {
        require_positive(alpha, "polarizability must be positive")?;
        require_positive(omega0, "transition frequency must be positive")?;
        require_positive(dx2, "dipole variance must be positive")?;
        Ok(AtomModel { oscillator: None, omega0, alpha, dx2 })
    }

    /// Oscillator charge, when built from `(e, m, ω₀)`.
    pub fn charge(&self) -> Option<f64> {
        self.oscillator.map(|(e, _)| e)
    }

    /// Oscillator mass, when built from `(e, m, ω₀)`.
    pub fn mass(&self) -> Option<f64> {
        self.oscillator.map(|(_, m)| m)
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Ground-state variance `⟨0|d_x²|0⟩`.
    pub fn dx2(&self) -> f64 {
        self.dx2
    }

    /// Whether `ħω₀α = 2⟨0|d_x²|0⟩` holds to `rel_tol`.
    pub fn closure_holds(&self, rel_tol: f64) -> bool {
        let lhs = self.omega0 * self.alpha;
        libm::fabs(lhs - 2.0 * self.dx2) <= rel_tol * lhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyResult {
    /// Shifted angular frequency ω.
    pub omega: f64,
    /// `(ω - ω₀)/ω₀`.
    pub relative_shift: f64,
    /// `(ω/ω₀)² - 1`, i.e. minus α times the geometric bracket.
    pub coupling: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    /// Expansion parameter: α times the isotropically averaged bracket.
    pub xi_alpha: f64,
    pub valid: bool,
}

pub fn polarizability_from_oscillator(e: f64, m: f64, omega0: f64) -> Result<f64> {
    require_positive(e, "charge must be positive")?;
    require_positive(m, "mass must be positive")?;
    require_positive(omega0, "frequency must be positive")?;
    Ok(e * e / (m * omega0 * omega0))
}

/// Coefficient of `α` under the square root for the plane wall:
/// `(1 + cos²θ)/(8a³)`.
pub fn wall_coupling_bracket(a: f64, cos2: f64) -> f64 {
    (1.0 + cos2) / (8.0 * cube(a))
}

/// Coefficient of `α` under the square root for the sphere:
/// `(R cos²θ/z_r²)(1/(z_r-z_i)² - 1/z_r²) + (R³/z_r³)(1 + cos²θ)/(z_r-z_i)³`.
pub fn sphere_coupling_bracket(geom: &SphereGeometry, cos2: f64) -> f64 {
    cos2 * geom.charge_pair_coupling()
        + (1.0 + cos2) * geom.dipole_coupling()
}

fn shifted_frequency(omega0: f64, alpha_bracket: f64) -> Result<FrequencyResult> {
    let arg = 1.0 - alpha_bracket;
    if arg.is_nan() || arg <= 0.0 {
        return Err(Error::Validity("oscillator destabilized; model outside regime"));
    }
    let root = libm::sqrt(arg);
    Ok(FrequencyResult {
        omega: omega0 * root,
        // sqrt(1 - x) - 1 without cancellation for small x
        relative_shift: -alpha_bracket / (1.0 + root),
        coupling: -alpha_bracket,
    })
}

/// Exact shifted frequency in front of a plane wall at distance `a`.
pub fn wall_frequency(a: f64, atom: &AtomModel, theta: f64) -> Result<FrequencyResult> {
    require_positive(a, "wall distance must be positive")?;
    let c = libm::cos(theta);
    shifted_frequency(atom.omega0(), atom.alpha() * wall_coupling_bracket(a, c * c))
}

/// Leading-order zero-point shift near a wall, `-ħω₀α/(24a³)`.
pub fn wall_potential_semiclassical(a: f64, atom: &AtomModel) -> Result<f64> {
    require_positive(a, "wall distance must be positive")?;
    Ok(-atom.omega0() * atom.alpha() / (24.0 * cube(a)))
}

/// Exact shifted frequency near the sphere.
pub fn sphere_frequency(
    geom: &SphereGeometry,
    atom: &AtomModel,
    theta: f64,
) -> Result<FrequencyResult> {
    let c = libm::cos(theta);
    shifted_frequency(atom.omega0(), atom.alpha() * sphere_coupling_bracket(geom, c * c))
}

/// Leading-order zero-point shift near the sphere,
/// `-(ħω₀α/12)[4R³/((2R+a)³a³) + R/((2R+a)²a²) - R/(R+a)⁴]`,
/// split into image-dipole, near-charge and centre-charge terms.
pub fn sphere_potential_semiclassical(geom: &SphereGeometry, atom: &AtomModel) -> EnergyBreakdown {
    EnergyBreakdown::bracket(geom).scaled(-atom.omega0() * atom.alpha() / 12.0)
}

/// Expansion parameter of the frequency shift. The square root of the exact
/// frequency is real only while it stays below one.
pub fn validity_check(geom: &SphereGeometry, atom: &AtomModel) -> ValidityReport {
    let xi_alpha = atom.alpha() * sphere_coupling_bracket(geom, ISOTROPIC_COS2);
    ValidityReport { xi_alpha, valid: xi_alpha < 1.0 }
}
