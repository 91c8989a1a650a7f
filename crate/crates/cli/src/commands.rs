use vdw_sphere::analysis::{
    conducting_point_limit, plane_wall_limit, sweep, Grid,
};
use vdw_sphere::electrostatics::interaction_energy;
use vdw_sphere::oracles::{work_rotation, work_translation};
use vdw_sphere::quantum::sphere_potential_two_level;
use vdw_sphere::semiclassical::{sphere_coupling_bracket, sphere_frequency, validity_check};
use vdw_sphere::units::DEFAULT_LENGTH_SCALE;
use vdw_sphere::{AtomModel, DipolePose, Kind, Model, SphereGeometry, UnitMode, UnitSystem};

use crate::args::{
    AtomArgs, Cli, Command, FrequencyArgs, GridArgs, LimitsArgs, PotentialArgs, UnitsArg,
    WorkPathArgs,
};
use crate::output::{Cell, Table};
use crate::verify::run_suite;
use crate::CliError;

/// A finished command: its table and whether every check it ran passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    pub success: bool,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Outcome { table, success: true }
    }
}

struct Boundary {
    units: UnitSystem,
}

impl Boundary {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let units = match (cli.common.units, cli.common.length_scale) {
            (UnitsArg::Reduced, None) => UnitSystem::reduced(),
            (UnitsArg::Reduced, Some(_)) => {
                return Err(CliError::Usage("--length-scale requires --units si".into()))
            }
            (UnitsArg::Si, scale) => UnitSystem::si(scale.unwrap_or(DEFAULT_LENGTH_SCALE))?,
        };
        Ok(Boundary { units })
    }

    fn is_si(&self) -> bool {
        self.units.mode() == UnitMode::SI
    }

    fn label(&self) -> String {
        match self.units.mode() {
            UnitMode::Reduced => "reduced".into(),
            UnitMode::SI => format!("si(L0={}m)", self.units.length_scale()),
        }
    }

    fn input(&self, value: f64, kind: Kind) -> Result<f64, CliError> {
        Ok(self.units.to_reduced(value, kind)?)
    }

    fn output(&self, value: f64, kind: Kind) -> Cell {
        Cell::Num(self.units.from_reduced(value, kind).unwrap_or(f64::NAN))
    }

    fn require_reduced(&self, command: &str) -> Result<(), CliError> {
        if self.is_si() {
            return Err(CliError::Usage(format!("{command} works in reduced units only")));
        }
        Ok(())
    }

    fn atom(&self, args: &AtomArgs, model: Model) -> Result<AtomModel, CliError> {
        let alpha = self.input(args.alpha, Kind::Polarizability)?;
        let omega = self.input(args.omega, Kind::Frequency)?;
        match (model, args.dx2) {
            (Model::Quantum, Some(_)) if self.is_si() => Err(CliError::Usage(
                "--dx2 is a reduced-unit input; in SI mode the dominant-transition value is used"
                    .into(),
            )),
            (Model::Quantum, dx2) if !self.is_si() => {
                Ok(AtomModel::new(alpha, omega, dx2.unwrap_or(2.0))?)
            }
            (_, Some(_)) if model != Model::Quantum => {
                Err(CliError::Usage("--dx2 only applies to the quantum model".into()))
            }
            _ => Ok(AtomModel::dominant_transition(alpha, omega)?),
        }
    }

    fn grid(&self, args: &GridArgs) -> Result<Grid, CliError> {
        Ok(Grid::new(
            self.input(args.a_min, Kind::Length)?,
            self.input(args.a_max, Kind::Length)?,
            args.points,
            args.spacing.into(),
        )?)
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let b = Boundary::new(cli)?;
    match &cli.command {
        Command::Potential(args) => potential(&b, args),
        Command::Frequency(args) => frequency(&b, args),
        Command::Limits(args) => limits(&b, args),
        Command::WorkPath(args) => {
            b.require_reduced("work-path")?;
            work_path(args)
        }
        Command::Verify(args) => {
            b.require_reduced("verify")?;
            let report = run_suite(args.tol, args.samples, args.seed)?;
            Ok(Outcome { success: report.all_passed(), table: report.table() })
        }
    }
}

fn potential(b: &Boundary, args: &PotentialArgs) -> Result<Outcome, CliError> {
    let model: Model = args.model.into();
    let atom = b.atom(&args.atom, model)?;
    let radius = b.input(args.radius, Kind::Length)?;
    let rows = sweep(radius, model, &atom, &b.grid(&args.grid)?)?;

    let mut table = Table::new(&["a", "U_total", "U_dipole", "U_plus", "U_minus"])
        .meta("command", "potential")
        .meta("model", model.name())
        .meta("radius", args.radius)
        .meta("units", b.label());
    for row in rows {
        table.push(vec![
            b.output(row.a, Kind::Length),
            b.output(row.total, Kind::Energy),
            b.output(row.dipole, Kind::Energy),
            b.output(row.plus, Kind::Energy),
            b.output(row.minus, Kind::Energy),
        ]);
    }
    Ok(Outcome::ok(table))
}

fn frequency(b: &Boundary, args: &FrequencyArgs) -> Result<Outcome, CliError> {
    if !(0.0..=std::f64::consts::PI).contains(&args.theta) {
        return Err(CliError::Usage("--theta must lie in [0, pi]".into()));
    }
    let atom = b.atom(&args.atom, Model::Semiclassical)?;
    let radius = b.input(args.radius, Kind::Length)?;
    let cos = args.theta.cos();

    let mut table =
        Table::new(&["a", "omega", "relative_shift", "coupling", "xi_alpha", "valid"])
            .meta("command", "frequency")
            .meta("radius", args.radius)
            .meta("theta", args.theta)
            .meta("units", b.label());
    for a in b.grid(&args.grid)?.points() {
        let geom = SphereGeometry::new(radius, a)?;
        let coupling = -atom.alpha() * sphere_coupling_bracket(&geom, cos * cos);
        let report = validity_check(&geom, &atom);
        let (omega, shift) = match sphere_frequency(&geom, &atom, args.theta) {
            Ok(f) => (b.output(f.omega, Kind::Frequency), Cell::Num(f.relative_shift)),
            Err(_) => (Cell::Num(f64::NAN), Cell::Num(f64::NAN)),
        };
        table.push(vec![
            b.output(a, Kind::Length),
            omega,
            shift,
            Cell::Num(coupling),
            Cell::Num(report.xi_alpha),
            Cell::Bool(report.valid),
        ]);
    }
    Ok(Outcome::ok(table))
}

fn limits(b: &Boundary, args: &LimitsArgs) -> Result<Outcome, CliError> {
    let atom = b.atom(&args.atom, Model::TwoLevel)?;
    let a = b.input(args.a, Kind::Length)?;
    let dx2 = 0.5 * atom.omega0() * atom.alpha();

    let mut table = Table::new(&[
        "radius_ratio",
        "R",
        "a",
        "U_exact",
        "U_plane",
        "rel_err_plane",
        "U_point",
        "rel_err_point",
    ])
    .meta("command", "limits")
    .meta("model", Model::TwoLevel.name())
    .meta("units", b.label());
    for &ratio in &args.radius_ratios {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(CliError::Usage("--radius-ratio values must be positive".into()));
        }
        let radius = ratio * a;
        let geom = SphereGeometry::new(radius, a)?;
        let exact = sphere_potential_two_level(&geom, &atom).total;
        let plane = plane_wall_limit(a, dx2)?;
        let point = conducting_point_limit(radius, a, &atom)?;
        table.push(vec![
            Cell::Num(ratio),
            b.output(radius, Kind::Length),
            b.output(a, Kind::Length),
            b.output(exact, Kind::Energy),
            b.output(plane, Kind::Energy),
            Cell::Num(((exact - plane) / exact).abs()),
            b.output(point, Kind::Energy),
            Cell::Num(((exact - point) / exact).abs()),
        ]);
    }
    Ok(Outcome::ok(table))
}

fn work_path(args: &WorkPathArgs) -> Result<Outcome, CliError> {
    let geom = SphereGeometry::new(args.radius, args.a)?;
    let pose = DipolePose::new(args.dipole, args.theta)?;
    let translation = work_translation(&geom, pose.magnitude(), args.tol)?;
    let rotation = work_rotation(&geom, pose.magnitude(), pose.theta(), args.tol)?;
    let d2 = pose.magnitude() * pose.magnitude();
    let dz2 = pose.d_z() * pose.d_z();
    let translation_closed = -0.5 * d2 * geom.dipole_coupling();
    let rotation_closed = -0.5 * dz2 * (geom.dipole_coupling() + geom.charge_pair_coupling());
    let lhs = translation.value + rotation.value;
    let rhs = interaction_energy(&geom, &pose).total;
    let allowed =
        args.tol.max(10.0 * (translation.abs_error_estimate + rotation.abs_error_estimate));
    let pass = (lhs - rhs).abs() <= allowed;

    let mut table = Table::new(&[
        "W_I",
        "W_I_closed",
        "W_II",
        "W_II_closed",
        "work_total",
        "half_d_dot_E",
        "abs_diff",
        "pass",
    ])
    .meta("command", "work-path")
    .meta("radius", args.radius)
    .meta("a", args.a)
    .meta("dipole", args.dipole)
    .meta("theta", args.theta)
    .meta("tol", args.tol);
    table.push(vec![
        Cell::Num(translation.value),
        Cell::Num(translation_closed),
        Cell::Num(rotation.value),
        Cell::Num(rotation_closed),
        Cell::Num(lhs),
        Cell::Num(rhs),
        Cell::Num((lhs - rhs).abs()),
        Cell::Bool(pass),
    ]);
    Ok(Outcome { table, success: pass })
}

