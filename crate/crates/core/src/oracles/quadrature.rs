//! Globally adaptive Gauss–Kronrod (7, 15) quadrature.

#![allow(clippy::excessive_precision)]

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Evaluations charged for one application of the rule.
const RULE_EVALS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Stopping rule: the estimated error must not exceed
/// `max(abs, rel·|value|)`, within `max_evaluations` integrand calls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_evaluations: usize,
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0, max_evaluations: 200_000 }
    }

    pub fn relative(rel: f64) -> Self {
        Tolerance { abs: 0.0, rel, max_evaluations: 200_000 }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * libm::fabs(value))
    }

    fn check(&self) -> Result<()> {
        let ok = |t: f64| t.is_finite() && t >= 0.0;
        if !(ok(self.abs) && ok(self.rel)) || (self.abs == 0.0 && self.rel == 0.0) {
            return Err(Error::Precondition("quadrature tolerance must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        lo,
        hi,
        value: kronrod * half,
        error: libm::fabs((kronrod - gauss) * half),
    }
}

/// Integrates `f` over `[lo, hi]` (either order), bisecting the segment with
/// the largest error estimate until the tolerance is met.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    tol.check()?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain("integration limits must be finite"));
    }
    if hi < lo {
        let r = integrate(f, hi, lo, tol)?;
        return Ok(QuadratureResult { value: -r.value, ..r });
    }

    let first = gauss_kronrod(&f, lo, hi);
    if !first.value.is_finite() {
        return Err(Error::Domain("integrand is not finite on the interval"));
    }
    let mut evaluations = RULE_EVALS;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    while error > tol.target(value) {
        if evaluations + 2 * RULE_EVALS > tol.max_evaluations {
            return Err(Error::Convergence { evaluations, estimate: error });
        }
        let worst = heap.pop().expect("work list is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) {
            // segment can no longer be split in double precision
            return Err(Error::Convergence { evaluations, estimate: error });
        }
        let left = gauss_kronrod(&f, worst.lo, mid);
        let right = gauss_kronrod(&f, mid, worst.hi);
        evaluations += 2 * RULE_EVALS;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if !value.is_finite() {
            return Err(Error::Domain("integrand is not finite on the interval"));
        }
    }

    // re-sum to shed the drift of the running updates
    let (value, error) = heap
        .iter()
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error));
    Ok(QuadratureResult { value, abs_error_estimate: error, evaluations })
}

/// Integrates `f` over `[lo, ∞)`.
///
/// The range is covered by panels of doubling width and truncated at the
/// first point `s` where `tail_bound(s)`, a caller-supplied bound on
/// `|∫_s^∞ f|`, drops below a tenth of the requested tolerance. The bound is
/// folded into the returned error estimate.
pub fn integrate_to_infinity<F, B>(f: F, lo: f64, tail_bound: B, tol: Tolerance) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
    B: Fn(f64) -> f64,
{
    tol.check()?;
    if !(lo.is_finite() && lo > 0.0) {
        return Err(Error::Domain("semi-infinite integration needs a positive lower limit"));
    }
    let panel_tol = Tolerance {
        abs: tol.abs / 64.0,
        rel: tol.rel / 8.0,
        max_evaluations: tol.max_evaluations,
    };
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    let mut start = lo;
    loop {
        let tail = libm::fabs(tail_bound(start));
        if tail <= 0.1 * tol.target(value) {
            return Ok(QuadratureResult {
                value,
                abs_error_estimate: error + tail,
                evaluations: evaluations.max(1),
            });
        }
        if !start.is_finite() || evaluations >= tol.max_evaluations {
            return Err(Error::Convergence { evaluations, estimate: error + tail });
        }
        let panel = integrate(&f, start, 2.0 * start, panel_tol)?;
        value += panel.value;
        error += panel.abs_error_estimate;
        evaluations += panel.evaluations;
        start *= 2.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;

    #[test]
    fn polynomials_are_exact() {
        // K15 integrates degree 22 exactly; one rule application suffices
        let r = integrate(|x| x.powi(10) - 3.0 * x * x, -1.0, 2.0, Tolerance::absolute(1e-12)).unwrap();
        let exact = (2f64.powi(11) + 1.0) / 11.0 - (8.0 + 1.0);
        assert_relative_eq!(r.value, exact, max_relative = 1e-14);
        assert_eq!(r.evaluations, 15);
    }

    #[test]
    fn reversed_limits() {
        let fwd = integrate(libm::sin, 0.0, PI, Tolerance::absolute(1e-13)).unwrap();
        let back = integrate(libm::sin, PI, 0.0, Tolerance::absolute(1e-13)).unwrap();
        assert_relative_eq!(fwd.value, 2.0, max_relative = 1e-13);
        assert_eq!(back.value, -fwd.value);
    }

    #[test]
    fn peaked_integrand() {
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, Tolerance::relative(1e-12)).unwrap();
        let exact = 2.0 * libm::atan(1.0 / 1e-2) / 1e-2;
        assert!((r.value - exact).abs() <= 1e-11 * exact);
        assert!(r.abs_error_estimate >= 0.0);
        assert!(r.evaluations > 15);
    }

    #[test]
    fn empty_range() {
        let r = integrate(|x| x, 1.0, 1.0, Tolerance::absolute(1e-10)).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.evaluations >= 1);
    }

    #[test]
    fn budget_exhaustion() {
        let tol = Tolerance { abs: 1e-14, rel: 0.0, max_evaluations: 100 };
        let r = integrate(|x| libm::sqrt(x).recip(), 0.0, 1.0, tol);
        assert!(matches!(r, Err(Error::Convergence { .. })));
    }

    #[test]
    fn bad_tolerance() {
        assert!(integrate(|x| x, 0.0, 1.0, Tolerance::absolute(0.0)).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, Tolerance::absolute(f64::NAN)).is_err());
    }

    #[test]
    fn semi_infinite() {
        // ∫_1^∞ x⁻³ = 1/2, tail ∫_s^∞ = 1/(2s²)
        let r = integrate_to_infinity(|x| x.powi(-3), 1.0, |s| 0.5 / (s * s), Tolerance::relative(1e-12))
            .unwrap();
        assert_relative_eq!(r.value, 0.5, max_relative = 1e-12);
        assert!(r.abs_error_estimate < 1e-12);
    }
}
