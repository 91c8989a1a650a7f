use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vdw_sphere::{Model, Spacing};

#[derive(Debug, Clone, Parser)]
#[command(name = "vdw-sphere", version, about = "Nonretarded atom–sphere dispersion potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Unit system of inputs and outputs.
    #[arg(long, value_enum, default_value_t = UnitsArg::Reduced, global = true)]
    pub units: UnitsArg,

    /// Length scale L₀ in metres (SI mode only).
    #[arg(long, global = true)]
    pub length_scale: Option<f64>,

    /// Output file; stdout when absent. Relative paths are resolved against
    /// $VDW_SPHERE_OUT_DIR when it is set.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Potential curve U(a) and its three image contributions.
    Potential(PotentialArgs),
    /// Shifted oscillator frequency and validity parameter over a range of a.
    Frequency(FrequencyArgs),
    /// Exact potential against the plane-wall and conducting-point asymptotes.
    Limits(LimitsArgs),
    /// Assembly work along the translate-then-rotate path against -(1/2) d·E.
    WorkPath(WorkPathArgs),
    /// Run the numerical oracle suite; exits 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    Reduced,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Semiclassical,
    Quantum,
    TwoLevel,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Semiclassical => Model::Semiclassical,
            ModelArg::Quantum => Model::Quantum,
            ModelArg::TwoLevel => Model::TwoLevel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Log,
    Linear,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Spacing {
        match s {
            SpacingArg::Log => Spacing::Log,
            SpacingArg::Linear => Spacing::Linear,
        }
    }
}

/// Atomic parameters. In SI mode `alpha` is in C·m²/V and `omega` in rad/s.
#[derive(Debug, Clone, Args)]
pub struct AtomArgs {
    /// Static polarizability α.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,

    /// Dominant transition (or oscillator) angular frequency ω₀.
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,

    /// Ground-state variance ⟨0|d_x²|0⟩ in reduced units, used by the quantum
    /// model. Defaults to 2, i.e. ⟨0|d_x²|0⟩/2 = 1. Not accepted in SI mode,
    /// where the dominant-transition value ħωα/2 is used.
    #[arg(long)]
    pub dx2: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.1)]
    pub a_min: f64,

    #[arg(long, default_value_t = 3.0)]
    pub a_max: f64,

    #[arg(long, default_value_t = 200)]
    pub points: usize,

    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Quantum)]
    pub model: ModelArg,

    /// Sphere radius R.
    #[arg(long, default_value_t = 0.5)]
    pub radius: f64,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub atom: AtomArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FrequencyArgs {
    #[arg(long, default_value_t = 0.5)]
    pub radius: f64,

    /// Oscillation angle θ to the radial axis, radians.
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub atom: AtomArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LimitsArgs {
    /// Ratios R/a to evaluate (repeatable).
    #[arg(long = "radius-ratio", num_args = 1.., default_values_t = [1e-4, 1e-3, 1e-2, 1e4, 1e7])]
    pub radius_ratios: Vec<f64>,

    /// Separation a.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,

    #[command(flatten)]
    pub atom: AtomArgs,
}

#[derive(Debug, Clone, Args)]
pub struct WorkPathArgs {
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,

    #[arg(long, default_value_t = 1.0)]
    pub a: f64,

    /// Dipole magnitude d (reduced units).
    #[arg(long, default_value_t = 1.0)]
    pub dipole: f64,

    /// Final angle θ, radians.
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,

    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,

    /// Random configurations for the half-factor check.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,

    #[arg(long, default_value_t = 20_240_601)]
    pub seed: u64,
}
