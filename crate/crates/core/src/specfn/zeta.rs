use std::f64::consts::LN_2;

use super::bernoulli::b2;
use super::gamma::log_gamma;
use crate::numeric::{finite, sin_pi};
use crate::{ComplexValue, Result, ZetaError};

const STIELTJES: [f64; 7] = [
    -0.072_815_845_483_676_72,
    -0.009_690_363_192_872_318,
    0.002_053_834_420_303_346,
    0.002_325_370_065_467_3,
    0.000_793_323_817_301_062_7,
    -0.000_238_769_345_430_199_6,
    -0.000_527_289_567_057_751,
];
const LN_PI: f64 = 1.144_729_885_849_400_2;
const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// ζ(s) by Euler–Maclaurin summation; used for Re s ≥ 1/2. The caller passes
/// s − 1 separately so that it keeps full relative accuracy near the pole.
fn zeta_euler_maclaurin(s: ComplexValue, s_minus_one: ComplexValue) -> ComplexValue {
    let n = 20 + s.norm().ceil() as usize;
    let nf = n as f64;
    let mut head = ComplexValue::new(0.0, 0.0);
    for k in (1..n).rev() {
        head += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    let mut total = head + n_pow * nf / s_minus_one + 0.5 * n_pow;
    // correction terms B_{2j}/(2j)! · s(s+1)…(s+2j-2) · N^{-s-2j+1}
    let mut rising = s;
    let mut factor = n_pow / nf;
    let mut fact = 2.0;
    for j in 1..=40usize {
        let term = b2(j) / fact * rising * factor;
        total += term;
        if term.norm() < 1e-18 * total.norm() {
            break;
        }
        let jj = (2 * j) as f64;
        rising *= (s + (jj - 1.0)) * (s + jj);
        factor /= nf * nf;
        fact *= (jj + 1.0) * (jj + 2.0);
    }
    total
}

fn zeta_unchecked(s: ComplexValue) -> ComplexValue {
    if s.re >= 0.5 {
        return zeta_euler_maclaurin(s, s - 1.0);
    }
    if s.norm() < 1e-9 {
        // ζ(s) = -1/2 - (log 2π / 2) s + O(s²)
        return -0.5 - 0.5 * LN_2PI * s;
    }
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let one = ComplexValue::new(1.0, 0.0);
    let trig = sin_pi(s / 2.0);
    if trig.norm() == 0.0 {
        return ComplexValue::new(0.0, 0.0);
    }
    let lg = match log_gamma(one - s) {
        Ok(v) => v,
        Err(_) => return ComplexValue::new(f64::NAN, f64::NAN),
    };
    let log_factor = s * LN_2 + (s - one) * LN_PI + lg;
    log_factor.exp() * trig * zeta_euler_maclaurin(one - s, -s)
}

/// The Riemann zeta function on the whole plane minus s = 1.
pub fn riemann_zeta(s: ComplexValue) -> Result<ComplexValue> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(ZetaError::pole("riemann_zeta", s));
    }
    finite("riemann_zeta", zeta_unchecked(s))
}

/// ζ'(s) by Richardson-extrapolated central differences (steps 1e-4, 1e-5),
/// switching to the Laurent expansion right next to the pole.
pub fn riemann_zeta_deriv(s: ComplexValue) -> Result<ComplexValue> {
    let w = s - 1.0;
    if w.norm() < 1e-12 {
        return Err(ZetaError::pole("riemann_zeta_deriv", s));
    }
    if w.norm() < 0.05 {
        // ζ'(s) = -1/w² + Σ_{n≥1} (-1)^n γ_n w^{n-1}/(n-1)!
        let mut acc = -1.0 / (w * w);
        let mut pow = ComplexValue::new(1.0, 0.0);
        let mut sign = -1.0;
        for (k, g) in STIELTJES.iter().enumerate() {
            if k > 0 {
                pow = pow * w / k as f64;
            }
            acc += sign * g * pow;
            sign = -sign;
        }
        return finite("riemann_zeta_deriv", acc);
    }
    let central = |h: f64| (zeta_unchecked(s + h) - zeta_unchecked(s - h)) / (2.0 * h);
    let d1 = central(1e-4);
    let d2 = central(1e-5);
    finite("riemann_zeta_deriv", (100.0 * d2 - d1) / 99.0)
}

/// ξ(s) = π^{-s/2} Γ(s/2) ζ(s), which satisfies ξ(s) = ξ(1-s).
pub fn completed_xi(s: ComplexValue) -> Result<ComplexValue> {
    if s.norm() < 1e-12 || (s - 1.0).norm() < 1e-12 {
        return Err(ZetaError::pole("completed_xi", s));
    }
    let m = (s.re / 2.0).round();
    let near_trivial_zero =
        m < 0.0 && (s - ComplexValue::new(2.0 * m, 0.0)).norm() < 1e-6;
    let t = if near_trivial_zero { 1.0 - s } else { s };
    let lg = log_gamma(t / 2.0)?;
    let z = riemann_zeta(t)?;
    finite("completed_xi", (lg - t / 2.0 * LN_PI).exp() * z)
}
