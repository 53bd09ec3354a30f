use std::f64::consts::PI;

use crate::{ComplexValue, Result, ZetaError};

/// A value together with an a-posteriori absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T = ComplexValue> {
    pub value: T,
    pub abs_err: f64,
}

impl<T> EvalResult<T> {
    pub fn new(value: T, abs_err: f64) -> Self {
        EvalResult { value, abs_err }
    }
}

/// Neumaier's improved Kahan summation, for real or complex addends.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    re: (f64, f64),
    im: (f64, f64),
}

#[inline]
fn neumaier_step(acc: &mut (f64, f64), x: f64) {
    let (sum, comp) = *acc;
    let t = sum + x;
    let c = if sum.abs() >= x.abs() {
        (sum - t) + x
    } else {
        (x - t) + sum
    };
    *acc = (t, comp + c);
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: ComplexValue) {
        neumaier_step(&mut self.re, z.re);
        neumaier_step(&mut self.im, z.im);
    }

    #[inline]
    pub fn add_real(&mut self, x: f64) {
        neumaier_step(&mut self.re, x);
    }

    pub fn merge(&mut self, other: &NeumaierSum) {
        neumaier_step(&mut self.re, other.re.0);
        neumaier_step(&mut self.re, other.re.1);
        neumaier_step(&mut self.im, other.im.0);
        neumaier_step(&mut self.im, other.im.1);
    }

    pub fn total(&self) -> ComplexValue {
        ComplexValue::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }

    pub fn total_real(&self) -> f64 {
        self.re.0 + self.re.1
    }
}

/// Reduce x = m + r with |r| ≤ 1/2; returns (r, parity of m).
#[inline]
fn reduce(x: f64) -> (f64, bool) {
    let m = x.round();
    (x - m, m.rem_euclid(2.0) != 0.0)
}

/// sin(πx) with the argument reduced by the nearest integer first.
pub(crate) fn sin_pi_real(x: f64) -> f64 {
    let (r, odd) = reduce(x);
    let v = if r.abs() <= 0.25 {
        (PI * r).sin()
    } else {
        (PI * (0.5 - r.abs())).cos().copysign(r)
    };
    if odd {
        -v
    } else {
        v
    }
}

pub(crate) fn sin_pi(z: ComplexValue) -> ComplexValue {
    let (r, odd) = reduce(z.re);
    let v = if r.abs() <= 0.25 {
        (ComplexValue::new(r, z.im) * PI).sin()
    } else {
        // sin(πw) = ±cos(π(1/2 ∓ w)) with the real part of the shift exact
        let sign = r.signum();
        let w = ComplexValue::new(0.5 - r.abs(), -sign * z.im);
        (w * PI).cos() * sign
    };
    if odd {
        -v
    } else {
        v
    }
}

pub(crate) fn cos_pi(z: ComplexValue) -> ComplexValue {
    let (r, odd) = reduce(z.re);
    let v = if r.abs() <= 0.25 {
        (ComplexValue::new(r, z.im) * PI).cos()
    } else {
        let sign = r.signum();
        let w = ComplexValue::new(0.5 - r.abs(), -sign * z.im);
        (w * PI).sin()
    };
    if odd {
        -v
    } else {
        v
    }
}

/// log sin(πz) on a branch consistent with exp; stays finite for large |Im z|.
pub(crate) fn log_sin_pi(z: ComplexValue) -> ComplexValue {
    if z.im.abs() < 20.0 {
        return sin_pi(z).ln();
    }
    if z.im < 0.0 {
        return log_sin_pi(z.conj()).conj();
    }
    // sin(πz) = (i/2) e^{-iπz} (1 - e^{2πiz}), and e^{2πiz} is tiny here.
    let m = z.re.round();
    let r = ComplexValue::new(z.re - m, z.im);
    let i = ComplexValue::i();
    let small = (i * 2.0 * PI * r).exp();
    let mut out = -i * PI * r + ComplexValue::new(-std::f64::consts::LN_2, PI / 2.0)
        + ln_1p(-small);
    if m.rem_euclid(2.0) != 0.0 {
        out += ComplexValue::new(0.0, PI);
    }
    out
}

fn ln_1p(z: ComplexValue) -> ComplexValue {
    if z.norm() < 1e-8 {
        z - z * z / 2.0
    } else {
        (ComplexValue::new(1.0, 0.0) + z).ln()
    }
}

/// cot(πz), stable for large |Im z|.
pub(crate) fn cot_pi(z: ComplexValue) -> ComplexValue {
    let i = ComplexValue::i();
    let one = ComplexValue::new(1.0, 0.0);
    if z.im > 20.0 {
        let e = (i * 2.0 * PI * z).exp();
        -i * (one + e) / (one - e)
    } else if z.im < -20.0 {
        let e = (-i * 2.0 * PI * z).exp();
        i * (one + e) / (one - e)
    } else {
        cos_pi(z) / sin_pi(z)
    }
}

pub(crate) fn finite(function: &'static str, z: ComplexValue) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(ZetaError::overflow(function, "non-finite result"))
    }
}

/// Distance from z to the nearest point of {m + offset : m ≥ first}.
pub(crate) fn distance_to_ladder(z: ComplexValue, offset: f64, first: i64) -> (f64, f64) {
    let m = ((z.re - offset).round() as i64).max(first);
    let p = m as f64 + offset;
    ((z - ComplexValue::new(p, 0.0)).norm(), p)
}

/// Least-squares slope of log|y| against log x.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    if y.iter().any(|v| !(v.abs() > 0.0) || !v.is_finite()) {
        return None;
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.abs().ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_pi_exact_at_integers() {
        for m in -20..20 {
            assert_eq!(sin_pi_real(m as f64), 0.0);
            assert_eq!(sin_pi(ComplexValue::new(m as f64, 0.0)).norm(), 0.0);
        }
        assert!((sin_pi_real(0.5) - 1.0).abs() < 1e-16);
    }

    #[test]
    fn log_sin_pi_matches_direct_value() {
        for &(re, im) in &[(0.3, 25.0), (-2.7, 30.0), (1.4, -22.0), (0.25, 3.0)] {
            let z = ComplexValue::new(re, im);
            let direct = (z * PI).sin();
            let via_log = log_sin_pi(z).exp();
            assert!((via_log - direct).norm() <= 1e-12 * direct.norm(), "{z}");
        }
    }

    #[test]
    fn reduced_trig_matches_library_trig() {
        for &(re, im) in &[(0.3, 0.0), (0.7, 1.5), (-1.2, -2.0), (2.45, 0.3), (-0.6, 4.0)] {
            let z = ComplexValue::new(re, im);
            assert!((sin_pi(z) - (z * PI).sin()).norm() < 1e-14 * (z * PI).sin().norm());
            assert!((cos_pi(z) - (z * PI).cos()).norm() < 1e-14 * (z * PI).cos().norm());
            assert!((sin_pi_real(re) - (re * PI).sin()).abs() < 1e-15);
        }
        // relative accuracy next to a zero of cos(πx)
        let z = ComplexValue::new(0.5 + 1e-9, 0.0);
        assert!((cos_pi(z).re / (-PI * 1e-9) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn cot_pi_branches_agree() {
        let z = ComplexValue::new(0.3, 19.999);
        let w = ComplexValue::new(0.3, 20.001);
        assert!((cot_pi(z) - cot_pi(w)).norm() < 1e-12);
    }

    #[test]
    fn neumaier_recovers_cancelled_terms() {
        let mut s = NeumaierSum::new();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add_real(x);
        }
        assert_eq!(s.total_real(), 2.0);
    }

    #[test]
    fn slope_of_power_law() {
        let x = [10.0, 20.0, 40.0];
        let y: Vec<f64> = x.iter().map(|v: &f64| 3.0 * v.powf(-1.5)).collect();
        assert!((log_log_slope(&x, &y).unwrap() + 1.5).abs() < 1e-12);
        assert!(log_log_slope(&x, &[1.0, 0.0, 1.0]).is_none());
    }
}
