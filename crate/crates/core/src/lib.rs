//! Nonretarded van der Waals interaction between a polarizable atom and an
//! isolated, perfectly conducting sphere.
//!
//! Two models are provided:
//!
//! - the semiclassical fluctuating-dipoles model ([`semiclassical`]), where the
//!   atom is a harmonic oscillator whose frequency is shifted by the fields of
//!   its own images and the zero-point energy shift is read as a potential;
//! - first-order perturbation theory ([`quantum`]) with the interaction
//!   Hamiltonian `-(1/2) d·E`.
//!
//! Everything is computed in reduced units where `4πε₀ = 1` and `ħ = 1`
//! (see [`units`]). The [`oracles`] module holds independent numerical checks
//! (adaptive quadrature, ODE integration, finite differences) used by the test
//! suites and by the `verify` command of the CLI.
//!
//! The crate is `no_std` and only needs `alloc` for sweeps and the adaptive
//! quadrature work list.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod electrostatics;
mod error;
pub mod geometry;
mod math;
pub mod oracles;
pub mod quantum;
pub mod semiclassical;
pub mod units;

pub use error::{Error, Result};
pub use math::Vec3;

pub use analysis::{Grid, Model, Spacing, SweepRow};
pub use electrostatics::{EnergyBreakdown, FieldSample};
pub use geometry::{DipolePose, ImageSystem, SphereGeometry};
pub use quantum::DipoleVariances;
pub use semiclassical::{AtomModel, FrequencyResult, ValidityReport};
pub use units::{Kind, UnitMode, UnitSystem};
