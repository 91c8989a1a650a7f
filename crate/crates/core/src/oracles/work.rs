//! External work needed to assemble the dipole–sphere configuration.
//!
//! Path: bring the dipole in from infinity along `ẑ` while it points along
//! `ŷ` (only the image dipole exists then), then rotate it at fixed distance
//! from θ = π/2 to its final angle. The sum of the two works must equal the
//! interaction energy `-(1/2) d·E`.

use core::f64::consts::FRAC_PI_2;

use super::quadrature::{integrate, integrate_to_infinity, QuadratureResult, Tolerance};
use crate::electrostatics::{interaction_energy, torque_x, translation_force};
use crate::geometry::{DipolePose, SphereGeometry};
use crate::math::cube;
use crate::{Error, Result};

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Precondition("tolerance must be positive"))
    }
}

/// `∫_x^∞ (1+ξ)/(ξ⁴(2+ξ)⁴) dξ` to relative accuracy `rel_tol`.
///
/// This is the translation work in units of `-3d²/R³`, with `x = a/R`.
pub fn dimensionless_work_integral(x: f64, rel_tol: f64) -> Result<QuadratureResult> {
    check_tol(rel_tol)?;
    let integrand = |xi: f64| {
        let p = xi * (2.0 + xi);
        let p2 = p * p;
        (1.0 + xi) / (p2 * p2)
    };
    // (2+ξ)⁴ ≥ (1+ξ)ξ³, so the integrand is below ξ⁻⁷
    let tail = |s: f64| {
        let s3 = cube(s);
        1.0 / (6.0 * s3 * s3)
    };
    integrate_to_infinity(integrand, x, tail, Tolerance::relative(rel_tol))
}

/// Work `W_I = -∫ F·dr` to bring a `ŷ`-oriented dipole of magnitude `d` from
/// infinity to separation `a` of `geom`, by quadrature of the force.
pub fn work_translation(geom: &SphereGeometry, d: f64, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    let pose = DipolePose::new(d, FRAC_PI_2)?;
    let r = geom.radius();
    // validated once: every separation on the path is ≥ a > 0
    let force_at = |s: f64| -> f64 {
        let g = SphereGeometry::new(r, s).expect("path separations stay valid");
        translation_force(&g, &pose).expect("pose is along y").z
    };
    // |F(s)| ≤ 3d²R³/s⁷
    let tail = |s: f64| {
        let s3 = cube(s);
        0.5 * d * d * cube(r) / (s3 * s3)
    };
    let tolerance = Tolerance { abs: tol, rel: 1e-13, max_evaluations: 400_000 };
    // moving inward along -ẑ: W = -∫_∞^a F_z ds = ∫_a^∞ F_z ds
    integrate_to_infinity(force_at, geom.separation(), tail, tolerance)
}

/// Work `W_II` done against the image torque while rotating the dipole from
/// θ = π/2 to `theta_final` at fixed position.
///
/// Increasing θ turns `d` about `-x̂`, so `W_II = ∫_{π/2}^{θ} τ_x dθ'`.
pub fn work_rotation(
    geom: &SphereGeometry,
    d: f64,
    theta_final: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    check_tol(tol)?;
    DipolePose::new(d, theta_final)?;
    let torque = |theta: f64| {
        let pose = DipolePose::new(d, theta.clamp(0.0, core::f64::consts::PI))
            .expect("angle stays in range");
        torque_x(geom, &pose)
    };
    integrate(torque, FRAC_PI_2, theta_final, Tolerance { abs: tol, rel: 1e-13, max_evaluations: 200_000 })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfFactorReport {
    pub translation: QuadratureResult,
    pub rotation: QuadratureResult,
    /// `W_I + W_II`.
    pub lhs: f64,
    /// `-(1/2) d·E` at the final pose.
    pub rhs: f64,
    pub pass: bool,
}

/// Compares the numerically integrated assembly work with `-(1/2) d·E`.
pub fn verify_half_factor(
    geom: &SphereGeometry,
    pose: &DipolePose,
    tol: f64,
) -> Result<HalfFactorReport> {
    let translation = work_translation(geom, pose.magnitude(), tol)?;
    let rotation = work_rotation(geom, pose.magnitude(), pose.theta(), tol)?;
    let lhs = translation.value + rotation.value;
    let rhs = interaction_energy(geom, pose).total;
    let allowed = tol.max(10.0 * (translation.abs_error_estimate + rotation.abs_error_estimate));
    Ok(HalfFactorReport {
        translation,
        rotation,
        lhs,
        rhs,
        pass: libm::fabs(lhs - rhs) <= allowed,
    })
}
