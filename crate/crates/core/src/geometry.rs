//! Sphere–atom configuration and its classical image system.
//!
//! The sphere is centred at the origin and the atom sits on the `+z` axis at
//! `z_r = R + a`. The images of a point dipole in an isolated neutral sphere
//! are a dipole and a charge `q_i` at the inverse point `z_i = R²/z_r`, plus a
//! compensating charge `-q_i` at the centre.

use core::f64::consts::PI;

use crate::math::{cube, pow4, require_positive};
use crate::{Error, Result, Vec3};

/// Smallest accepted `a/R`. Below this the inverse point and the atom are
/// too close for the configuration to be meaningful in double precision.
pub const MIN_SEPARATION_RATIO: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereGeometry {
    radius: f64,
    separation: f64,
    atom_z: f64,
    image_z: f64,
    gap: f64,
}

impl SphereGeometry {
    pub fn new(radius: f64, separation: f64) -> Result<Self> {
        let r = require_positive(radius, "sphere radius must be positive and finite")?;
        let a = require_positive(separation, "separation must be positive and finite")?;
        if a / r < MIN_SEPARATION_RATIO {
            return Err(Error::Domain("separation too small relative to the radius"));
        }
        let atom_z = r + a;
        Ok(SphereGeometry {
            radius: r,
            separation: a,
            atom_z,
            image_z: r * r / atom_z,
            // z_r - z_i without the cancellation of the direct subtraction
            gap: a * (2.0 * r + a) / atom_z,
        })
    }

    /// Sphere radius `R`.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Minimum atom–surface distance `a`.
    pub fn separation(&self) -> f64 {
        self.separation
    }

    /// Atom position `z_r = R + a`.
    pub fn atom_z(&self) -> f64 {
        self.atom_z
    }

    /// Inverse point `z_i = R²/z_r`.
    pub fn image_z(&self) -> f64 {
        self.image_z
    }

    /// Atom–image distance `z_r - z_i = a(2R + a)/(R + a)`.
    pub fn gap(&self) -> f64 {
        self.gap
    }

    /// Same radius, different separation.
    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        SphereGeometry::new(self.radius, separation)
    }

    /// `R³/((z_r - z_i)³ z_r³) = R³/(a³(2R + a)³)`, the image-dipole coupling.
    pub fn dipole_coupling(&self) -> f64 {
        let (r, a) = (self.radius, self.separation);
        cube(r) / cube(a * (2.0 * r + a))
    }

    /// `R/(z_r² (z_r - z_i)²) = R/(a²(2R + a)²)`, coupling to the near image charge.
    pub fn near_charge_coupling(&self) -> f64 {
        let (r, a) = (self.radius, self.separation);
        let p = a * (2.0 * r + a);
        r / (p * p)
    }

    /// `R/z_r⁴ = R/(R + a)⁴`, coupling to the charge at the centre.
    pub fn center_charge_coupling(&self) -> f64 {
        self.radius / pow4(self.atom_z)
    }

    /// Combined coupling to the two image charges,
    /// `R/(a²(2R+a)²) - R/(R+a)⁴ = R³(R² + 4Ra + 2a²)/(a²(2R+a)²(R+a)⁴)`.
    ///
    /// The right-hand form has no cancellation, which matters for `R ≪ a`
    /// where the two charge terms almost annihilate.
    pub fn charge_pair_coupling(&self) -> f64 {
        let (r, a) = (self.radius, self.separation);
        let p = a * (2.0 * r + a);
        cube(r) * (r * r + 4.0 * r * a + 2.0 * a * a) / (p * p * pow4(self.atom_z))
    }

    /// The three terms of the geometric factor shared by both sphere
    /// potentials, in the order image dipole, near charge, centre charge:
    /// `4R³/((2R+a)³a³)`, `R/((2R+a)²a²)`, `-R/(R+a)⁴`.
    pub fn bracket_terms(&self) -> [f64; 3] {
        [
            4.0 * self.dipole_coupling(),
            self.near_charge_coupling(),
            -self.center_charge_coupling(),
        ]
    }

    /// Sum of [`bracket_terms`](Self::bracket_terms), evaluated without
    /// cancellation. Positive for every valid geometry.
    pub fn bracket(&self) -> f64 {
        4.0 * self.dipole_coupling() + self.charge_pair_coupling()
    }
}

/// Dipole of magnitude `d` in the y–z plane, at angle `theta` from the
/// outward radial axis `ẑ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipolePose {
    magnitude: f64,
    theta: f64,
}

impl DipolePose {
    pub fn new(magnitude: f64, theta: f64) -> Result<Self> {
        if !(magnitude.is_finite() && magnitude >= 0.0) {
            return Err(Error::Domain("dipole magnitude must be finite and nonnegative"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain("dipole angle must lie in [0, pi]"));
        }
        Ok(DipolePose { magnitude, theta })
    }

    /// Reduces an arbitrary dipole vector to the y–z plane using the
    /// rotational symmetry of the configuration about `ẑ`.
    pub fn from_vector(d: Vec3) -> Result<Self> {
        let transverse = libm::hypot(d.x, d.y);
        DipolePose::new(d.norm(), libm::atan2(transverse, d.z))
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `d_y = d sin θ`.
    pub fn d_y(&self) -> f64 {
        self.magnitude * libm::sin(self.theta)
    }

    /// `d_z = d cos θ`.
    pub fn d_z(&self) -> f64 {
        self.magnitude * libm::cos(self.theta)
    }

    pub fn vector(&self) -> Vec3 {
        Vec3::new(0.0, self.d_y(), self.d_z())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageSystem {
    /// Image dipole `d_i = (d_z ẑ - d_y ŷ) R³/z_r³`.
    pub dipole_moment: Vec3,
    /// Axial position of the image dipole and near charge (`z_i`).
    pub dipole_position: f64,
    /// `q_i = d_z R/z_r²`, located at `z_i`.
    pub charge_near: f64,
    /// `-q_i`, located at the sphere centre.
    pub charge_center: f64,
}

impl ImageSystem {
    pub fn new(geom: &SphereGeometry, pose: &DipolePose) -> Self {
        let zr = geom.atom_z();
        let r = geom.radius();
        let scale = cube(r / zr);
        let charge_near = pose.d_z() * r / (zr * zr);
        ImageSystem {
            dipole_moment: Vec3::new(0.0, -pose.d_y() * scale, pose.d_z() * scale),
            dipole_position: geom.image_z(),
            charge_near,
            charge_center: -charge_near,
        }
    }
}
