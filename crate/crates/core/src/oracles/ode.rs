use core::f64::consts::PI;

use crate::{Error, Result};

/// One integration of `ẍ = -ω₀² x + k x` and the frequency measured from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorRun {
    pub k: f64,
    pub omega0: f64,
    pub duration: f64,
    pub dt: f64,
    pub measured_omega: f64,
}

/// Integrates the perturbed oscillator with classical RK4 from `x(0) = 1`,
/// `ẋ(0) = 0` for `cycles` unperturbed periods and measures the angular
/// frequency from the spacing of its zero crossings, located by linear
/// interpolation between steps.
pub fn ode_frequency(k: f64, omega0: f64, cycles: usize, dt: f64) -> Result<OscillatorRun> {
    if !(omega0.is_finite() && omega0 > 0.0) {
        return Err(Error::Domain("omega0 must be positive"));
    }
    if !k.is_finite() || k >= omega0 * omega0 {
        return Err(Error::Validity("coupling destabilizes the oscillator (k >= omega0^2)"));
    }
    let stiffness = omega0 * omega0 - k;
    if !(dt > 0.0 && dt * libm::sqrt(stiffness) < 0.1) {
        return Err(Error::Precondition("time step too large for the oscillator frequency"));
    }
    if cycles == 0 {
        return Err(Error::Precondition("at least one cycle is required"));
    }

    let accel = |x: f64| -stiffness * x;
    let duration = cycles as f64 * 2.0 * PI / omega0;
    let steps = libm::ceil(duration / dt) as usize;

    let (mut x, mut v) = (1.0_f64, 0.0_f64);
    let mut first_crossing = None;
    let mut last_crossing = 0.0;
    let mut crossings = 0usize;
    for n in 0..steps {
        let t = n as f64 * dt;
        let k1x = v;
        let k1v = accel(x);
        let k2x = v + 0.5 * dt * k1v;
        let k2v = accel(x + 0.5 * dt * k1x);
        let k3x = v + 0.5 * dt * k2v;
        let k3v = accel(x + 0.5 * dt * k2x);
        let k4x = v + dt * k3v;
        let k4v = accel(x + dt * k3x);
        let x_next = x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        let v_next = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

        if (x > 0.0) != (x_next > 0.0) {
            let crossing = t + dt * x / (x - x_next);
            first_crossing.get_or_insert(crossing);
            last_crossing = crossing;
            crossings += 1;
        }
        x = x_next;
        v = v_next;
    }

    let first = first_crossing.unwrap_or(0.0);
    if crossings < 2 {
        return Err(Error::Precondition("run too short to observe two zero crossings"));
    }
    // consecutive zero crossings are half a period apart
    let measured_omega = PI * (crossings - 1) as f64 / (last_crossing - first);
    Ok(OscillatorRun { k, omega0, duration, dt, measured_omega })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unperturbed() {
        let run = ode_frequency(0.0, 2.0, 50, 0.005).unwrap();
        assert!((run.measured_omega - 2.0).abs() / 2.0 < 1e-6);
        assert!(run.measured_omega > 0.0);
    }

    #[test]
    fn perturbed() {
        let run = ode_frequency(0.05, 1.0, 100, 0.01).unwrap();
        assert!((run.measured_omega - libm::sqrt(0.95)).abs() < 1e-4);
        assert!((run.measured_omega - 0.974679).abs() < 1e-4);
    }

    #[test]
    fn rejects_unstable_and_coarse() {
        assert!(matches!(ode_frequency(1.0, 1.0, 10, 0.01), Err(Error::Validity(_))));
        assert!(matches!(ode_frequency(2.0, 1.0, 10, 0.01), Err(Error::Validity(_))));
        assert!(matches!(ode_frequency(0.0, 1.0, 10, 0.2), Err(Error::Precondition(_))));
        assert!(matches!(ode_frequency(0.0, 1.0, 0, 0.01), Err(Error::Precondition(_))));
    }

    #[test]
    fn fourth_order_convergence() {
        let exact = libm::sqrt(0.9);
        let err = |dt: f64| (ode_frequency(0.1, 1.0, 400, dt).unwrap().measured_omega - exact).abs();
        let coarse = err(0.09);
        let fine = err(0.045);
        let ratio = coarse / fine;
        assert!(ratio > 12.0 && ratio < 20.0, "ratio {ratio}, errors {coarse:e} {fine:e}");
    }
}
