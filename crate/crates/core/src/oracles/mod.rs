//! Independent numerical checks of the closed forms.
//!
//! Nothing here reuses the algebra of the potentials: the assembly work is
//! integrated from the force and torque, the shifted frequency is measured
//! from a numerically integrated trajectory, and forces come from finite
//! differences of the potential.

mod finite_difference;
mod ode;
mod quadrature;
mod work;

pub use finite_difference::{finite_difference_force, potential_at, Surface};
pub use ode::{ode_frequency, OscillatorRun};
pub use quadrature::{integrate, integrate_to_infinity, QuadratureResult, Tolerance};
pub use work::{
    dimensionless_work_integral, verify_half_factor, work_rotation, work_translation,
    HalfFactorReport,
};
