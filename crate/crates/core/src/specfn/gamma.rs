use std::f64::consts::PI;

use super::bernoulli::b2;
use crate::numeric::{cot_pi, finite, log_sin_pi, sin_pi};
use crate::{ComplexValue, Result, ZetaError};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn near_nonpositive_integer(z: ComplexValue) -> bool {
    let m = z.re.round();
    m <= 0.0 && (z - ComplexValue::new(m, 0.0)).norm() < 1e-12
}

fn lanczos_ln_gamma(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut x = ComplexValue::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + x.ln()
}

fn ln_gamma_unchecked(z: ComplexValue) -> ComplexValue {
    if z.re < 0.5 {
        ComplexValue::new(PI.ln(), 0.0) - log_sin_pi(z) - lanczos_ln_gamma(1.0 - z)
    } else {
        lanczos_ln_gamma(z)
    }
}

/// log Γ(z), with exp(log_gamma(z)) = Γ(z).
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::pole("log_gamma", z));
    }
    finite("log_gamma", ln_gamma_unchecked(z))
}

/// Γ(z).
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::pole("gamma", z));
    }
    finite("gamma", ln_gamma_unchecked(z).exp())
}

/// The entire function 1/Γ(z); exactly zero at the non-positive integers.
pub fn recip_gamma(z: ComplexValue) -> ComplexValue {
    if z.re < 0.5 {
        let m = z.re.round();
        if z.im == 0.0 && z.re == m {
            return ComplexValue::new(0.0, 0.0);
        }
        sin_pi(z) / PI * lanczos_ln_gamma(1.0 - z).exp()
    } else {
        (-lanczos_ln_gamma(z)).exp()
    }
}

/// ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: ComplexValue) -> Result<ComplexValue> {
    if near_nonpositive_integer(z) {
        return Err(ZetaError::pole("digamma", z));
    }
    if z.re < 0.5 {
        let reflected = digamma_right(1.0 - z);
        return finite("digamma", reflected - PI * cot_pi(z));
    }
    finite("digamma", digamma_right(z))
}

fn digamma_right(mut z: ComplexValue) -> ComplexValue {
    let mut acc = ComplexValue::new(0.0, 0.0);
    while z.norm() < 12.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut series = ComplexValue::new(0.0, 0.0);
    for k in 1..=10 {
        series += b2(k) / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    acc + z.ln() - 0.5 / z - series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn known_log_gamma_values() {
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-15);
        assert!(half.im.abs() < 1e-15);
        let five = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((five.re - 24f64.ln()).abs() < 1e-14);
        let five_half = log_gamma(c(2.5, 0.0)).unwrap();
        assert!((five_half.re - (0.75 * PI.sqrt()).ln()).abs() < 1e-14);
    }

    #[test]
    fn poles_are_reported() {
        for m in 0..6 {
            assert!(log_gamma(c(-(m as f64), 0.0)).unwrap_err().is_pole());
            assert!(digamma(c(-(m as f64) + 1e-13, 0.0)).is_err());
        }
        assert!(log_gamma(c(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn gamma_of_negative_half_integers() {
        // Γ(1/2 - n) = (-4)^n n! √π / (2n)!
        let mut fact_n = 1.0;
        let mut fact_2n = 1.0;
        for n in 1..12 {
            fact_n *= n as f64;
            fact_2n *= (2 * n - 1) as f64 * (2 * n) as f64;
            let expect = (-4f64).powi(n) * fact_n * PI.sqrt() / fact_2n;
            let got = gamma(c(0.5 - n as f64, 0.0)).unwrap();
            assert!((got.re / expect - 1.0).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn large_imaginary_part_matches_stirling_modulus() {
        // |Γ(1/2 + iy)|² = π / cosh(πy)
        for &y in &[10.0, 40.0, 100.0] {
            let lg = log_gamma(c(0.5, y)).unwrap();
            let expect = 0.5 * (PI.ln() - (PI * y + (-2.0 * PI * y).exp().ln_1p() - 2f64.ln()));
            assert!((lg.re - expect).abs() < 1e-12 * expect.abs().max(1.0), "y = {y}");
        }
    }

    #[test]
    fn reciprocal_gamma_zeros_and_values() {
        for m in 0..8 {
            assert_eq!(recip_gamma(c(-(m as f64), 0.0)).norm(), 0.0);
        }
        assert!((recip_gamma(c(4.0, 0.0)).re - 1.0 / 6.0).abs() < 1e-15);
        // 1/Γ(z) ~ (-1)^m m! (z + m) near z = -m
        let z = c(-3.0 + 1e-7, 0.0);
        assert!((recip_gamma(z).re / (-6.0 * 1e-7) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn digamma_values() {
        let one = digamma(c(1.0, 0.0)).unwrap();
        assert!((one.re + EULER_GAMMA).abs() < 1e-14);
        let half = digamma(c(0.5, 0.0)).unwrap();
        assert!((half.re + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
        let two = digamma(c(2.0, 0.0)).unwrap();
        assert!((two.re - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        // reflection side: ψ(-1/2) = ψ(1/2) + 2
        let mhalf = digamma(c(-0.5, 0.0)).unwrap();
        assert!((mhalf.re - (half.re + 2.0)).abs() < 1e-13);
    }

    #[test]
    fn digamma_matches_log_gamma_difference() {
        for &(re, im) in &[(0.3, 2.0), (-4.2, 7.5), (12.0, -30.0), (0.7, 80.0)] {
            let z = c(re, im);
            let h = 1e-4;
            let d = (log_gamma(z + h).unwrap() - log_gamma(z - h).unwrap()) / (2.0 * h);
            let d2 = (log_gamma(z + h / 10.0).unwrap() - log_gamma(z - h / 10.0).unwrap())
                / (2.0 * h / 10.0);
            let rich = (100.0 * d2 - d) / 99.0;
            let psi = digamma(z).unwrap();
            assert!((psi - rich).norm() < 1e-8 * psi.norm().max(1.0), "{z}");
        }
    }
}
