//! Asymptotic limits, cross-model comparison and potential sweeps.
//!
//! The limits are independent closed forms, not the exact potential
//! evaluated at extreme radii, so comparing them against the exact
//! expressions checks both.

use alloc::vec::Vec;

use crate::electrostatics::EnergyBreakdown;
use crate::geometry::SphereGeometry;
use crate::math::{cube, require_positive};
use crate::quantum::{sphere_potential_quantum, sphere_potential_two_level};
use crate::semiclassical::{sphere_potential_semiclassical, AtomModel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Fluctuating dipoles, `-(ħω₀α/12) B`.
    Semiclassical,
    /// Perturbative, `-(⟨d_x²⟩/2) B`.
    Quantum,
    /// Perturbative with the dominant-transition closure, `-(ħω_m0 α/4) B`.
    TwoLevel,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::Semiclassical, Model::Quantum, Model::TwoLevel];

    pub fn name(&self) -> &'static str {
        match self {
            Model::Semiclassical => "semiclassical",
            Model::Quantum => "quantum",
            Model::TwoLevel => "two-level",
        }
    }
}

/// Sphere potential of `model`. The quantum model reads the atom's
/// `⟨0|d_x²|0⟩`; the other two read `ω₀α`.
pub fn sphere_potential(model: Model, geom: &SphereGeometry, atom: &AtomModel) -> EnergyBreakdown {
    match model {
        Model::Semiclassical => sphere_potential_semiclassical(geom, atom),
        Model::Quantum => sphere_potential_quantum(geom, atom.dx2())
            .expect("atom variance is positive by construction"),
        Model::TwoLevel => sphere_potential_two_level(geom, atom),
    }
}

/// `R → ∞` asymptote: `-⟨d_x²⟩/(4a³)`.
pub fn plane_wall_limit(a: f64, dx2: f64) -> Result<f64> {
    require_positive(a, "separation must be positive")?;
    Ok(-dx2 / (4.0 * cube(a)))
}

/// `R ≪ a` asymptote: `-(3/2) ħω_m0 α R³/a⁶`.
pub fn conducting_point_limit(radius: f64, a: f64, atom: &AtomModel) -> Result<f64> {
    require_positive(radius, "radius must be positive")?;
    require_positive(a, "separation must be positive")?;
    let a3 = cube(a);
    Ok(-1.5 * atom.omega0() * atom.alpha() * cube(radius) / (a3 * a3))
}

/// London atom–atom potential `-3ħω_m0 α²/(4r⁶)` for two identical atoms.
pub fn london_reference(r: f64, atom: &AtomModel) -> Result<f64> {
    require_positive(r, "distance must be positive")?;
    let r3 = cube(r);
    Ok(-0.75 * atom.omega0() * atom.alpha() * atom.alpha() / (r3 * r3))
}

/// Two-level over semiclassical sphere potential. Requires the
/// dominant-transition closure to hold for `atom`.
pub fn method_ratio(geom: &SphereGeometry, atom: &AtomModel) -> Result<f64> {
    if !atom.closure_holds(1e-12) {
        return Err(Error::Validity("atom does not satisfy the dominant-transition closure"));
    }
    Ok(sphere_potential_two_level(geom, atom).total / sphere_potential_semiclassical(geom, atom).total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    Linear,
    #[default]
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub a_min: f64,
    pub a_max: f64,
    pub n: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn new(a_min: f64, a_max: f64, n: usize, spacing: Spacing) -> Result<Self> {
        require_positive(a_min, "a_min must be positive")?;
        require_positive(a_max, "a_max must be positive")?;
        if a_max <= a_min {
            return Err(Error::Domain("a_max must exceed a_min"));
        }
        if n < 2 {
            return Err(Error::Domain("a grid needs at least two points"));
        }
        Ok(Grid { a_min, a_max, n, spacing })
    }

    /// Grid abscissae in ascending order; endpoints are exact.
    pub fn points(&self) -> Vec<f64> {
        let last = self.n - 1;
        (0..self.n)
            .map(|i| {
                if i == 0 {
                    return self.a_min;
                }
                if i == last {
                    return self.a_max;
                }
                let t = i as f64 / last as f64;
                match self.spacing {
                    Spacing::Linear => self.a_min + t * (self.a_max - self.a_min),
                    Spacing::Log => self.a_min * libm::pow(self.a_max / self.a_min, t),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub total: f64,
    pub dipole: f64,
    pub plus: f64,
    pub minus: f64,
    pub model: Model,
}

/// Potential of `model` for a sphere of fixed `radius` over the separations
/// of `grid`, in ascending `a`.
pub fn sweep(radius: f64, model: Model, atom: &AtomModel, grid: &Grid) -> Result<Vec<SweepRow>> {
    let grid = Grid::new(grid.a_min, grid.a_max, grid.n, grid.spacing)?;
    grid.points()
        .into_iter()
        .map(|a| {
            let geom = SphereGeometry::new(radius, a)?;
            let u = sphere_potential(model, &geom, atom);
            Ok(SweepRow {
                a,
                total: u.total,
                dipole: u.image_dipole,
                plus: u.near_charge,
                minus: u.center_charge,
                model,
            })
        })
        .collect()
}
