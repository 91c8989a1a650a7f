//! The oracle battery behind `vdw-sphere verify`.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vdw_sphere::analysis::{conducting_point_limit, method_ratio, plane_wall_limit, Model};
use vdw_sphere::electrostatics::{field_at_atom, field_by_superposition};
use vdw_sphere::oracles::{
    dimensionless_work_integral, finite_difference_force, ode_frequency, verify_half_factor,
    Surface,
};
use vdw_sphere::quantum::{sphere_potential_quantum, sphere_potential_two_level};
use vdw_sphere::semiclassical::{sphere_coupling_bracket, sphere_frequency};
use vdw_sphere::{AtomModel, DipolePose, SphereGeometry};

use crate::output::{Cell, Table};
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub reference: f64,
    /// Discrepancy measure; absolute or relative depending on the check.
    pub error: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, value: f64, reference: f64, error: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            value,
            reference,
            error,
            threshold,
            pass: error <= threshold,
        }
    }

    fn relative(name: impl Into<String>, value: f64, reference: f64, threshold: f64) -> Self {
        let err = ((value - reference) / reference).abs();
        Check::new(name, value, reference, err, threshold)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["check", "value", "reference", "error", "threshold", "pass"])
            .meta("command", "verify")
            .meta("passed", format!("{}/{}", self.passed(), self.checks.len()));
        for c in &self.checks {
            t.push(vec![
                Cell::Text(c.name.clone()),
                Cell::Num(c.value),
                Cell::Num(c.reference),
                Cell::Num(c.error),
                Cell::Num(c.threshold),
                Cell::Bool(c.pass),
            ]);
        }
        t
    }
}

/// `dB/da` of `B = 4R³/((2R+a)³a³) + R/((2R+a)²a²) - R/(R+a)⁴`, differentiated
/// by hand term by term.
pub fn bracket_derivative(r: f64, a: f64) -> f64 {
    let s = 2.0 * r + a;
    -12.0 * r.powi(3) * (1.0 / (s.powi(4) * a.powi(3)) + 1.0 / (s.powi(3) * a.powi(4)))
        - 2.0 * r * (1.0 / (s.powi(3) * a.powi(2)) + 1.0 / (s.powi(2) * a.powi(3)))
        + 4.0 * r / (r + a).powi(5)
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

pub fn run_suite(tol: f64, samples: usize, seed: u64) -> Result<Report, CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    // assembly work equals -(1/2) d·E
    let unit = SphereGeometry::new(1.0, 1.0)?;
    let spot = verify_half_factor(&unit, &DipolePose::new(1.0, 0.0)?, tol)?;
    checks.push(Check::new("half_factor_spot", spot.lhs, -0.0613426, (spot.lhs - (-0.0613426)).abs(), 1e-7));
    let plane = SphereGeometry::new(1e4, 1.0)?;
    let r = verify_half_factor(&plane, &DipolePose::new(1.0, 0.7)?, tol)?;
    checks.push(Check::new("half_factor_plane_limit", r.lhs, r.rhs, (r.lhs - r.rhs).abs(), tol.max(10.0 * (r.translation.abs_error_estimate + r.rotation.abs_error_estimate))));
    for i in 0..samples {
        let a = log_uniform(&mut rng, 0.5, 2.0);
        let radius = a * log_uniform(&mut rng, 0.1, 10.0);
        let theta = rng.gen_range(0.0..=PI);
        let d = rng.gen_range(0.5..2.0);
        let geom = SphereGeometry::new(radius, a)?;
        let r = verify_half_factor(&geom, &DipolePose::new(d, theta)?, tol)?;
        let allowed = tol.max(10.0 * (r.translation.abs_error_estimate + r.rotation.abs_error_estimate));
        checks.push(Check::new(format!("half_factor_{i}"), r.lhs, r.rhs, (r.lhs - r.rhs).abs(), allowed));
    }

    // closed form of the translation integral
    for x in [0.1, 1.0, 10.0] {
        let q = dimensionless_work_integral(x, 1e-12)?;
        let closed = 1.0 / (6.0 * x.powi(3) * (2.0 + x).powi(3));
        checks.push(Check::relative(format!("work_integral_x{x}"), q.value, closed, 1e-10));
    }

    // measured oscillator frequency
    for ratio in [0.01, 0.05, 0.1] {
        let run = ode_frequency(ratio, 1.0, 100, 0.01)?;
        checks.push(Check::relative(format!("ode_k{ratio}"), run.measured_omega, (1.0 - ratio).sqrt(), 1e-4));
    }
    let atom = AtomModel::dominant_transition(0.1, 1.0)?;
    let k = atom.alpha() * sphere_coupling_bracket(&unit, 1.0);
    let run = ode_frequency(k, 1.0, 100, 0.01)?;
    let exact = sphere_frequency(&unit, &atom, 0.0)?;
    checks.push(Check::relative("ode_vs_sphere_frequency", run.measured_omega, exact.omega, 1e-4));

    // finite-difference force
    let quantum = AtomModel::new(1.0, 1.0, 2.0)?;
    for (radius, a) in [(0.5, 1.0), (2.0, 0.3)] {
        let analytic = -(-0.5 * 2.0 * bracket_derivative(radius, a));
        let surface = Surface::Sphere { radius };
        let h = a / 1000.0;
        let coarse = finite_difference_force(Model::Quantum, surface, &quantum, a, h)?;
        let fine = finite_difference_force(Model::Quantum, surface, &quantum, a, h / 2.0)?;
        checks.push(Check::relative(format!("fd_force_R{radius}_a{a}"), fine, analytic, 1e-5));
        let ratio = (coarse - analytic).abs() / (fine - analytic).abs();
        checks.push(Check::new(format!("fd_order_R{radius}_a{a}"), ratio, 4.0, (4.0 - ratio).max(0.0), 0.5));
    }

    // closed-form field against explicit superposition
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a = log_uniform(&mut rng, 0.1, 10.0);
        let radius = a * log_uniform(&mut rng, 0.1, 10.0);
        let geom = SphereGeometry::new(radius, a)?;
        let pose = DipolePose::new(rng.gen_range(0.1..2.0), rng.gen_range(0.0..=PI))?;
        let closed = field_at_atom(&geom, &pose).e;
        let direct = field_by_superposition(&geom, &pose)?.e;
        worst = worst.max((closed - direct).max_abs() / closed.max_abs());
    }
    checks.push(Check::new("superposition", worst, 0.0, worst, 1e-12));

    // factor 3 between the models
    let mut worst = 0.0f64;
    for i in 0..10 {
        for j in 0..10 {
            let radius = 10f64.powf(-2.0 + 4.0 * i as f64 / 9.0);
            let a = 10f64.powf(-2.0 + 4.0 * j as f64 / 9.0);
            let ratio = method_ratio(&SphereGeometry::new(radius, a)?, &atom)?;
            worst = worst.max(((ratio - 3.0) / 3.0).abs());
        }
    }
    checks.push(Check::new("factor_three", 3.0 * (1.0 + worst), 3.0, worst, 1e-13));

    // asymptotes
    for (ratio, limit) in [(1e4, 1e-3), (1e7, 1e-6)] {
        let u = sphere_potential_quantum(&SphereGeometry::new(ratio, 1.0)?, 1.0)?.total;
        checks.push(Check::relative(format!("plane_wall_R/a={ratio:e}"), u, plane_wall_limit(1.0, 1.0)?, limit));
    }
    let atom = AtomModel::dominant_transition(1.0, 1.0)?;
    let u = sphere_potential_two_level(&SphereGeometry::new(1e-3, 1.0)?, &atom).total;
    checks.push(Check::relative("conducting_point_R/a=1e-3", u, conducting_point_limit(1e-3, 1.0, &atom)?, 1e-2));

    // keeps the broadside pose covered even with --samples 0
    let r = verify_half_factor(&unit, &DipolePose::new(1.0, FRAC_PI_2)?, tol)?;
    checks.push(Check::new("half_factor_broadside", r.lhs, r.rhs, (r.lhs - r.rhs).abs(), tol));

    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_derivative_matches_difference_quotient() {
        let (r, a) = (0.7, 1.3);
        let h = 1e-5;
        let b = |a: f64| SphereGeometry::new(r, a).unwrap().bracket();
        let numeric = (b(a + h) - b(a - h)) / (2.0 * h);
        assert!(((numeric - bracket_derivative(r, a)) / numeric).abs() < 1e-8);
    }

    #[test]
    fn suite_passes() {
        let report = run_suite(1e-8, 5, 1).unwrap();
        for c in &report.checks {
            assert!(c.pass, "{c:?}");
        }
    }
}
