//! First-order perturbation theory with `W = -(1/2) d·E`.
//!
//! The energy shift is `⟨0|W|0⟩`, which only needs the ground-state dipole
//! variances. Named potentials assume an isotropic atom.

use crate::electrostatics::EnergyBreakdown;
use crate::geometry::SphereGeometry;
use crate::math::{cube, require_positive};
use crate::semiclassical::AtomModel;
use crate::{Error, Result};

/// Ground-state variances `⟨0|d_i²|0⟩` of the dipole operator components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleVariances {
    pub dx2: f64,
    pub dy2: f64,
    pub dz2: f64,
}

impl DipoleVariances {
    pub fn new(dx2: f64, dy2: f64, dz2: f64) -> Result<Self> {
        for v in [dx2, dy2, dz2] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Domain("dipole variances must be finite and nonnegative"));
            }
        }
        Ok(DipoleVariances { dx2, dy2, dz2 })
    }

    pub fn isotropic(dx2: f64) -> Result<Self> {
        DipoleVariances::new(dx2, dx2, dx2)
    }

    pub fn is_isotropic(&self) -> bool {
        self.dx2 == self.dy2 && self.dy2 == self.dz2
    }
}

/// `⟨0|W|0⟩ = -R³(⟨d_x²⟩+⟨d_y²⟩+2⟨d_z²⟩)/(2(z_r-z_i)³z_r³)
///            - (R⟨d_z²⟩/(2z_r²))(1/(z_r-z_i)² - 1/z_r²)`.
pub fn perturbation_shift(geom: &SphereGeometry, v: &DipoleVariances) -> Result<EnergyBreakdown> {
    let v = DipoleVariances::new(v.dx2, v.dy2, v.dz2)?;
    Ok(EnergyBreakdown::with_charge_pair(
        -0.5 * (v.dx2 + v.dy2 + 2.0 * v.dz2) * geom.dipole_coupling(),
        -0.5 * v.dz2 * geom.near_charge_coupling(),
        0.5 * v.dz2 * geom.center_charge_coupling(),
        -0.5 * v.dz2 * geom.charge_pair_coupling(),
    ))
}

/// Isotropic sphere potential
/// `-(⟨d_x²⟩/2)[4R³/((2R+a)³a³) + R/((2R+a)²a²) - R/(R+a)⁴]`.
pub fn sphere_potential_quantum(geom: &SphereGeometry, dx2: f64) -> Result<EnergyBreakdown> {
    if !(dx2.is_finite() && dx2 >= 0.0) {
        return Err(Error::Domain("dipole variance must be finite and nonnegative"));
    }
    Ok(EnergyBreakdown::bracket(geom).scaled(-0.5 * dx2))
}

/// Sphere potential of an atom with one dominant transition,
/// `-(ħω_m0 α/4) B(R, a)`.
pub fn sphere_potential_two_level(geom: &SphereGeometry, atom: &AtomModel) -> EnergyBreakdown {
    EnergyBreakdown::bracket(geom).scaled(-0.25 * atom.omega0() * atom.alpha())
}

/// Plane-wall potential `-(⟨d_x²⟩+⟨d_y²⟩+2⟨d_z²⟩)/(16a³)`.
pub fn wall_potential_quantum(a: f64, v: &DipoleVariances) -> Result<f64> {
    require_positive(a, "wall distance must be positive")?;
    let v = DipoleVariances::new(v.dx2, v.dy2, v.dz2)?;
    Ok(-(v.dx2 + v.dy2 + 2.0 * v.dz2) / (16.0 * cube(a)))
}

/// Dominant-transition closure `⟨0|d_x²|0⟩ = ħω_m0 α/2`.
pub fn dominant_transition_dx2(atom: &AtomModel) -> f64 {
    0.5 * atom.omega0() * atom.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiclassical::{sphere_potential_semiclassical, wall_potential_semiclassical};
    use approx::assert_relative_eq;

    #[test]
    fn shift_values() {
        let g = SphereGeometry::new(1.0, 1.0).unwrap();
        let zero = perturbation_shift(&g, &DipoleVariances::isotropic(0.0).unwrap()).unwrap();
        assert_eq!(zero.total, 0.0);

        let iso = perturbation_shift(&g, &DipoleVariances::isotropic(1.0).unwrap()).unwrap();
        assert_relative_eq!(iso.total, -0.5 * (4.0 / 27.0 + 7.0 / 144.0), max_relative = 1e-15);
        assert_relative_eq!(iso.total, -0.0983796, max_relative = 1e-6);

        let planar = perturbation_shift(&g, &DipoleVariances::new(1.0, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(planar.near_charge, 0.0);
        assert_eq!(planar.center_charge, 0.0);
        assert_relative_eq!(planar.image_dipole, -0.5 * 2.0 / 27.0, max_relative = 1e-15);

        assert!(DipoleVariances::new(1.0, -1.0, 1.0).is_err());
        let bad = DipoleVariances { dx2: -1.0, dy2: 0.0, dz2: 0.0 };
        assert!(perturbation_shift(&g, &bad).is_err());
    }

    #[test]
    fn sphere_potential_values() {
        let g = SphereGeometry::new(0.5, 1.0).unwrap();
        let u = sphere_potential_quantum(&g, 2.0).unwrap();
        assert_relative_eq!(u.total, -0.088_734_567_901_234_57, max_relative = 1e-14);
        assert!(u.image_dipole < 0.0 && u.near_charge < 0.0 && u.center_charge > 0.0);
        assert!(sphere_potential_quantum(&g, -1.0).is_err());

        let far = sphere_potential_quantum(&SphereGeometry::new(1e8, 1.0).unwrap(), 3.0).unwrap();
        assert_relative_eq!(far.total, -3.0 / 4.0, max_relative = 1e-7);
    }

    #[test]
    fn two_level_values() {
        let atom = AtomModel::dominant_transition(1.0, 1.0).unwrap();
        let g = SphereGeometry::new(0.5, 1.0).unwrap();
        let u = sphere_potential_two_level(&g, &atom);
        assert_relative_eq!(u.total, -0.088_734_567_901_234_57 / 4.0, max_relative = 1e-14);
        assert_relative_eq!(u.total, -0.0221838, max_relative = 1e-5);
        let s = sphere_potential_semiclassical(&g, &atom);
        assert_relative_eq!(u.total, 3.0 * s.total, max_relative = 1e-14);

        let small = SphereGeometry::new(1e-3, 1.0).unwrap();
        let u = sphere_potential_two_level(&small, &atom);
        assert_relative_eq!(u.total, -1.5e-9, max_relative = 1e-2);
    }

    #[test]
    fn wall_values() {
        let iso = DipoleVariances::isotropic(1.0).unwrap();
        assert_eq!(wall_potential_quantum(1.0, &iso).unwrap(), -0.25);
        assert!(wall_potential_quantum(0.0, &iso).is_err());

        let far = sphere_potential_quantum(&SphereGeometry::new(1e9, 1.3).unwrap(), 1.0).unwrap();
        assert_relative_eq!(far.total, wall_potential_quantum(1.3, &iso).unwrap(), max_relative = 1e-8);

        let atom = AtomModel::dominant_transition(0.7, 1.9).unwrap();
        let v = DipoleVariances::isotropic(dominant_transition_dx2(&atom)).unwrap();
        let q = wall_potential_quantum(2.0, &v).unwrap();
        assert_relative_eq!(q, -1.9 * 0.7 / (8.0 * 8.0), max_relative = 1e-15);
        assert_relative_eq!(q, 3.0 * wall_potential_semiclassical(2.0, &atom).unwrap(), max_relative = 1e-15);
    }

    #[test]
    fn closure() {
        let a = AtomModel::dominant_transition(1.0, 1.0).unwrap();
        assert_eq!(dominant_transition_dx2(&a), 0.5);
        let a = AtomModel::dominant_transition(2.0, 3.0).unwrap();
        assert_eq!(dominant_transition_dx2(&a), 3.0);
        let back = 2.0 * dominant_transition_dx2(&a) / a.omega0();
        assert_relative_eq!(back, 2.0, max_relative = 1e-15);
    }
}
