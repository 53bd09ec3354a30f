use std::f64::consts::PI;

use super::gamma::log_gamma;
use crate::ComplexValue;

fn ln_factorial(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    log_gamma(ComplexValue::new(n as f64 + 1.0, 0.0))
        .map(|v| v.re)
        .unwrap_or(f64::INFINITY)
}

/// e^{-x} I_n(x) by the ascending series.
fn series(order: u32, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let n = order as f64;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + n));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
        k += 1.0;
    }
    let log_prefix = n * (0.5 * x).ln() - ln_factorial(order) - x;
    if order == 0 {
        (-x).exp() * sum
    } else {
        log_prefix.exp() * sum
    }
}

/// e^{-x} I_0(x) by the asymptotic series truncated at its smallest term.
fn asymptotic_order0(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if next.abs() >= term.abs() || next.abs() < 1e-17 * sum {
            if next.abs() < term.abs() {
                sum += next;
            }
            break;
        }
        term = next;
        sum += term;
        k += 1.0;
    }
    sum / (2.0 * PI * x).sqrt()
}

/// e^{-x} I_order(x) for x ≥ 0 (negative x is mapped through I_n(-x) = (-1)^n I_n(x)).
pub fn bessel_i_scaled(order: u32, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_i_scaled(order, -x);
        return if order.is_multiple_of(2) { v } else { -v };
    }
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    if x <= 30.0 {
        return series(order, x);
    }
    large_argument(order, x)
}

fn large_argument(order: u32, x: f64) -> f64 {
    let i0 = asymptotic_order0(x);
    if order == 0 {
        return i0;
    }
    // Miller's backward recurrence I_{k-1} = (2k/x) I_k + I_{k+1}, normalized by I_0
    let start = order + (10.0 * x.sqrt()).ceil() as u32 + 30;
    let mut above = 0.0;
    let mut current = 1e-250;
    let mut at_order = 0.0;
    for k in (1..=start).rev() {
        let below = 2.0 * k as f64 / x * current + above;
        above = current;
        current = below;
        if k - 1 == order {
            at_order = current;
        }
        if current > 1e250 {
            current *= 1e-250;
            above *= 1e-250;
            at_order *= 1e-250;
        }
    }
    at_order / current * i0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_i_scaled(0, 0.0), 1.0);
        assert_eq!(bessel_i_scaled(1, 0.0), 0.0);
        assert_eq!(bessel_i_scaled(4, 0.0), 0.0);
    }

    #[test]
    fn large_argument_leading_terms() {
        let v = bessel_i_scaled(0, 100.0);
        let model = (2.0 * PI * 100.0).powf(-0.5) * (1.0 + 1.0 / 800.0);
        assert!((v / model - 1.0).abs() < 2e-5);
    }

    #[test]
    fn reference_values() {
        // e^{-x} I_n(x) from a 30-digit evaluation
        let cases = [
            (0, 1.0, 0.465_759_607_593_640_44),
            (1, 1.0, 0.207_910_415_349_708_45),
            (0, 10.0, 0.127_833_337_163_428_61),
            (3, 10.0, 0.079_830_361_029_840_517),
            (0, 31.0, 0.071_946_496_696_983_833),
            (2, 50.0, 0.054_321_901_691_738_377),
            (7, 200.0, 0.024_965_363_433_932_033),
        ];
        for (n, x, expect) in cases {
            let got = bessel_i_scaled(n, x);
            assert!((got / expect - 1.0).abs() < 1e-12, "I_{n}({x}): {got} vs {expect}");
        }
    }

    #[test]
    fn branch_switch_is_continuous() {
        for n in [0, 1, 5, 12] {
            let below = series(n, 30.0);
            let above = large_argument(n, 30.0);
            assert!((below / above - 1.0).abs() < 1e-13, "order {n}");
        }
    }
}
