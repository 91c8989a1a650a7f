//! Static near fields of the images at the atom, the `-(1/2) d·E`
//! interaction energy, and the force and torque along the assembly path.

use crate::geometry::{DipolePose, ImageSystem, SphereGeometry};
use crate::math::{cube, pow4};
use crate::{Error, Result, Vec3};

/// Electric field at the atom's position (reduced units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub e: Vec3,
}

/// An energy split by image source.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EnergyBreakdown {
    pub image_dipole: f64,
    pub near_charge: f64,
    pub center_charge: f64,
    pub total: f64,
}

impl EnergyBreakdown {
    /// Breakdown whose total is the plain sum of the parts.
    pub fn from_parts(image_dipole: f64, near_charge: f64, center_charge: f64) -> Self {
        EnergyBreakdown {
            image_dipole,
            near_charge,
            center_charge,
            total: image_dipole + near_charge + center_charge,
        }
    }

    /// Breakdown whose total uses `charge_pair`, the sum of the two charge
    /// parts computed without cancellation. The parts then add up to the total
    /// only to rounding relative to their magnitudes.
    pub fn with_charge_pair(
        image_dipole: f64,
        near_charge: f64,
        center_charge: f64,
        charge_pair: f64,
    ) -> Self {
        EnergyBreakdown {
            image_dipole,
            near_charge,
            center_charge,
            total: image_dipole + charge_pair,
        }
    }

    /// The geometric bracket of the sphere potentials, term by term.
    pub fn bracket(geom: &SphereGeometry) -> Self {
        let [d, p, m] = geom.bracket_terms();
        EnergyBreakdown::with_charge_pair(d, p, m, geom.charge_pair_coupling())
    }

    /// Every component multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        EnergyBreakdown {
            image_dipole: self.image_dipole * factor,
            near_charge: self.near_charge * factor,
            center_charge: self.center_charge * factor,
            total: self.total * factor,
        }
    }

    /// Sum of the magnitudes of the parts; the scale for comparing
    /// [`total`](Self::total) with the sum of the parts.
    pub fn magnitude(&self) -> f64 {
        libm::fabs(self.image_dipole) + libm::fabs(self.near_charge) + libm::fabs(self.center_charge)
    }
}

/// Near-zone (nonretarded) field of a point dipole `d` at displacement `r`
/// from it: `[3(d·r̂)r̂ - d]/|r|³`.
pub fn dipole_near_field(d: Vec3, r: Vec3) -> Result<Vec3> {
    let dist = r.norm();
    if dist == 0.0 || !dist.is_finite() {
        return Err(Error::Singularity("dipole field evaluated at the dipole"));
    }
    let rhat = r * (1.0 / dist);
    Ok((rhat * (3.0 * d.dot(rhat)) - d) * (1.0 / cube(dist)))
}

fn coulomb_field(q: f64, r: Vec3) -> Vec3 {
    let dist = r.norm();
    r * (q / cube(dist))
}

/// Field of all three images at the atom, from the closed form
/// `E = ((d·ẑ)ẑ + d) R³/((z_r-z_i)³ z_r³) + (d·ẑ)ẑ (R/z_r²)(1/(z_r-z_i)² - 1/z_r²)`.
pub fn field_at_atom(geom: &SphereGeometry, pose: &DipolePose) -> FieldSample {
    let d = pose.vector();
    let axial = Vec3::Z * pose.d_z();
    let charges = geom.charge_pair_coupling();
    FieldSample {
        e: (axial + d) * geom.dipole_coupling() + axial * charges,
    }
}

/// Field at the atom by explicit superposition over the [`ImageSystem`]
/// sources, independent of the closed form in [`field_at_atom`].
pub fn field_by_superposition(geom: &SphereGeometry, pose: &DipolePose) -> Result<FieldSample> {
    let images = ImageSystem::new(geom, pose);
    let atom = Vec3::new(0.0, 0.0, geom.atom_z());
    let image_at = Vec3::new(0.0, 0.0, images.dipole_position);
    let from_image = atom - image_at;
    let e = dipole_near_field(images.dipole_moment, from_image)?
        + coulomb_field(images.charge_near, from_image)
        + coulomb_field(images.charge_center, atom);
    Ok(FieldSample { e })
}

/// Energy `-(1/2) d·E` of the dipole in the field of its images, attributed
/// to each image source.
pub fn interaction_energy(geom: &SphereGeometry, pose: &DipolePose) -> EnergyBreakdown {
    let d2 = pose.magnitude() * pose.magnitude();
    let dz2 = pose.d_z() * pose.d_z();
    EnergyBreakdown::with_charge_pair(
        -0.5 * (d2 + dz2) * geom.dipole_coupling(),
        -0.5 * dz2 * geom.near_charge_coupling(),
        0.5 * dz2 * geom.center_charge_coupling(),
        -0.5 * dz2 * geom.charge_pair_coupling(),
    )
}

/// Force on a dipole held parallel to `ŷ` (θ = π/2), where only the image
/// dipole is present: `F = -3d² R³(R+a)/(a⁴(2R+a)⁴) ẑ`.
///
/// The closed form only covers this orientation; any other pose is rejected.
pub fn translation_force(geom: &SphereGeometry, pose: &DipolePose) -> Result<Vec3> {
    if libm::fabs(libm::cos(pose.theta())) > 1e-12 {
        return Err(Error::Contract("translation force requires a dipole along y (theta = pi/2)"));
    }
    let (r, a) = (geom.radius(), geom.separation());
    let d = pose.magnitude();
    let fz = -3.0 * d * d * cube(r) * (r + a) / (pow4(a) * pow4(2.0 * r + a));
    Ok(Vec3::Z * fz)
}

/// x component of the torque `d × E` with the full image set.
pub fn torque_x(geom: &SphereGeometry, pose: &DipolePose) -> f64 {
    let coupling = geom.dipole_coupling() + geom.charge_pair_coupling();
    pose.d_y() * pose.d_z() * coupling
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn unit_geom() -> SphereGeometry {
        SphereGeometry::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn near_field_cases() {
        assert_eq!(dipole_near_field(Vec3::Z, Vec3::Z).unwrap(), Vec3::Z * 2.0);
        assert_eq!(dipole_near_field(Vec3::Y, Vec3::Z).unwrap(), -Vec3::Y);
        assert_eq!(dipole_near_field(Vec3::Z, Vec3::Z * 2.0).unwrap(), Vec3::Z * 0.25);
        assert!(matches!(
            dipole_near_field(Vec3::Z, Vec3::ZERO),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn field_broadside() {
        let e = field_at_atom(&unit_geom(), &DipolePose::new(1.0, FRAC_PI_2).unwrap()).e;
        assert_relative_eq!(e.y, 1.0 / 27.0, max_relative = 1e-15);
        assert!(e.z.abs() < 1e-16);
        assert_eq!(e.x, 0.0);
    }

    #[test]
    fn field_axial() {
        let e = field_at_atom(&unit_geom(), &DipolePose::new(1.0, 0.0).unwrap()).e;
        // 2/27 + (1/4)(4/9 - 1/4)
        assert_relative_eq!(e.z, 2.0 / 27.0 + 7.0 / 144.0, max_relative = 1e-15);
        assert_relative_eq!(e.z, 0.122685, max_relative = 1e-5);
    }

    #[test]
    fn field_plane_limit() {
        let a = 0.7;
        let g = SphereGeometry::new(1e9, a).unwrap();
        let e = field_at_atom(&g, &DipolePose::new(1.0, 0.0).unwrap()).e;
        assert_relative_eq!(e.z, 2.0 / cube(2.0 * a), max_relative = 1e-8);
    }

    #[test]
    fn superposition_matches_closed_form() {
        for (r, a, th) in [(1.0, 1.0, 0.3), (0.2, 3.0, 2.0), (5.0, 0.5, 1.1)] {
            let g = SphereGeometry::new(r, a).unwrap();
            let p = DipolePose::new(1.3, th).unwrap();
            let closed = field_at_atom(&g, &p).e;
            let direct = field_by_superposition(&g, &p).unwrap().e;
            assert!((closed - direct).max_abs() <= 1e-12 * closed.max_abs());
        }
    }

    #[test]
    fn energies() {
        let g = unit_geom();
        let axial = interaction_energy(&g, &DipolePose::new(1.0, 0.0).unwrap());
        assert_relative_eq!(axial.total, -0.5 * (2.0 / 27.0 + 7.0 / 144.0), max_relative = 1e-15);
        assert_relative_eq!(axial.total, -0.0613426, max_relative = 1e-6);
        let e = field_at_atom(&g, &DipolePose::new(1.0, 0.0).unwrap()).e;
        assert_relative_eq!(axial.total, -0.5 * e.z, max_relative = 1e-15);

        let broadside = interaction_energy(&g, &DipolePose::new(1.0, FRAC_PI_2).unwrap());
        assert!(broadside.near_charge.abs() < 1e-32);
        assert!(broadside.center_charge.abs() < 1e-32);

        let zero = interaction_energy(&g, &DipolePose::new(0.0, 1.0).unwrap());
        assert_eq!(zero.total, 0.0);
    }

    #[test]
    fn force_closed_form() {
        let g = unit_geom();
        let f = translation_force(&g, &DipolePose::new(1.0, FRAC_PI_2).unwrap()).unwrap();
        assert_relative_eq!(f.z, -6.0 / 81.0, max_relative = 1e-15);
        let f0 = translation_force(&g, &DipolePose::new(0.0, FRAC_PI_2).unwrap()).unwrap();
        assert_eq!(f0.z, 0.0);
        assert!(matches!(
            translation_force(&g, &DipolePose::new(1.0, 1.0).unwrap()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn force_far_field() {
        // (R + a)/(a⁴(2R + a)⁴) -> 1/a⁷ as a grows
        let r = 1.0;
        let a = 1e4;
        let g = SphereGeometry::new(r, a).unwrap();
        let f = translation_force(&g, &DipolePose::new(1.0, FRAC_PI_2).unwrap()).unwrap();
        let leading = -3.0 * cube(r) / (cube(a) * pow4(a));
        assert_relative_eq!(f.z, leading, max_relative = 1e-3);
    }

    #[test]
    fn torque_values() {
        let g = unit_geom();
        assert_eq!(torque_x(&g, &DipolePose::new(1.0, 0.0).unwrap()), 0.0);
        assert!(torque_x(&g, &DipolePose::new(1.0, FRAC_PI_2).unwrap()).abs() < 1e-16);
        let t = torque_x(&g, &DipolePose::new(1.0, FRAC_PI_4).unwrap());
        assert_relative_eq!(t, 0.5 * (1.0 / 27.0 + 7.0 / 144.0), max_relative = 1e-14);
        assert_relative_eq!(t, 0.042824, max_relative = 1e-5);
        let t = torque_x(&g, &DipolePose::new(1.0, 3.0 * FRAC_PI_4).unwrap());
        assert!(t < 0.0);
    }

    #[test]
    fn torque_matches_cross_product() {
        let g = SphereGeometry::new(0.4, 1.7).unwrap();
        let p = DipolePose::new(2.0, 0.9).unwrap();
        let e = field_at_atom(&g, &p).e;
        let tau = p.vector().cross(e);
        assert_relative_eq!(tau.x, torque_x(&g, &p), max_relative = 1e-14);
    }
}
