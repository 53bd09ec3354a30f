use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Result, ZetaError};

/// Largest index m for which B_{2m} is tabulated.
pub(crate) const MAX_INDEX: usize = 150;

struct Tables {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let exact = even_bernoulli_exact(MAX_INDEX);
        let float = exact.iter().map(rational_to_f64).collect();
        Tables { exact, float }
    })
}

/// Tangent numbers T_1..T_m (T_k is the coefficient of x^{2k-1}/(2k-1)! in tan x),
/// by the in-place integer recurrence of Brent and Harvey.
fn tangent_numbers(m: usize) -> Vec<BigUint> {
    let mut t: Vec<BigUint> = Vec::with_capacity(m);
    let mut factorial = BigUint::one();
    for k in 1..=m {
        t.push(factorial.clone());
        factorial *= BigUint::from(k);
    }
    for k in 1..m {
        for j in k..m {
            let a = &t[j - 1] * BigUint::from(j - k);
            let b = &t[j] * BigUint::from(j - k + 2);
            t[j] = a + b;
        }
    }
    t
}

/// Exact B_2, B_4, ..., B_{2m}; index 0 holds B_2.
fn even_bernoulli_exact(m: usize) -> Vec<BigRational> {
    tangent_numbers(m)
        .into_iter()
        .enumerate()
        .map(|(i, tk)| {
            let k = i + 1;
            // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1))
            let four_k = BigInt::one() << (2 * k);
            let num = BigInt::from(tk) * BigInt::from(2 * k);
            let den = &four_k * (&four_k - BigInt::one());
            let r = BigRational::new(num, den);
            if k % 2 == 1 {
                r
            } else {
                -r
            }
        })
        .collect()
}

/// Correctly scaled f64 value of a big rational, saturating to ±inf or 0.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let num = r.numer().abs().to_biguint().unwrap_or_default();
    let den = r.denom().abs().to_biguint().unwrap_or_default();
    let top = |x: &BigUint| -> (f64, i64) {
        let bits = x.bits() as i64;
        let shift = (bits - 64).max(0);
        let head = (x >> (shift as usize)).to_u64().unwrap_or(u64::MAX);
        (head as f64, shift)
    };
    let (n, en) = top(&num);
    let (d, ed) = top(&den);
    let e = en - ed;
    let mut v = n / d;
    // scale in two steps so that intermediate powers stay representable
    let half = e / 2;
    v *= 2f64.powi(half as i32);
    v *= 2f64.powi((e - half) as i32);
    sign * v
}

/// B_{2m} as an exact rational.
pub(crate) fn bernoulli_even_exact(m: usize) -> Option<&'static BigRational> {
    if m == 0 || m > MAX_INDEX {
        return None;
    }
    Some(&tables().exact[m - 1])
}

/// B_{2m} in binary64.
pub fn bernoulli_even(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(ZetaError::domain("bernoulli_even", "index must be at least 1"));
    }
    if 2 * m > 2 * MAX_INDEX {
        return Err(ZetaError::overflow(
            "bernoulli_even",
            format!("B_{} beyond the tabulated range B_{}", 2 * m, 2 * MAX_INDEX),
        ));
    }
    let v = tables().float[m - 1];
    if !v.is_finite() {
        return Err(ZetaError::overflow(
            "bernoulli_even",
            format!("B_{} exceeds binary64 range", 2 * m),
        ));
    }
    Ok(v)
}

/// B_{2m} for the internal asymptotic series, where m is always small.
pub(crate) fn b2(m: usize) -> f64 {
    tables().float[m - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        assert_eq!(bernoulli_even(1).unwrap(), 1.0 / 6.0);
        assert_eq!(bernoulli_even(2).unwrap(), -1.0 / 30.0);
        assert_eq!(bernoulli_even(3).unwrap(), 1.0 / 42.0);
        assert_eq!(bernoulli_even(4).unwrap(), -1.0 / 30.0);
        assert_eq!(bernoulli_even(5).unwrap(), 5.0 / 66.0);
        assert_eq!(bernoulli_even(6).unwrap(), -691.0 / 2730.0);
        assert_eq!(bernoulli_even(7).unwrap(), 7.0 / 6.0);
    }

    #[test]
    fn exact_b12_and_b30() {
        let b12 = bernoulli_even_exact(6).unwrap();
        assert_eq!(b12, &BigRational::new(BigInt::from(-691), BigInt::from(2730)));
        let b30 = bernoulli_even_exact(15).unwrap();
        assert_eq!(
            b30,
            &BigRational::new(
                BigInt::from(8615841276005i64),
                BigInt::from(14322)
            )
        );
    }

    #[test]
    fn agrees_with_zeta_of_even_integers() {
        // |B_{2m}| = 2 (2m)! ζ(2m) / (2π)^{2m}, and ζ(2m) → 1 quickly
        for m in 10..60usize {
            let b = bernoulli_even(m).unwrap();
            let mut log_fact = 0.0;
            for j in 2..=2 * m {
                log_fact += (j as f64).ln();
            }
            let zeta: f64 = (1..200).map(|k| (k as f64).powi(-(2 * m as i32))).sum();
            let model = (2f64.ln() + log_fact - 2.0 * m as f64 * (2.0 * std::f64::consts::PI).ln())
                .exp()
                * zeta;
            assert!((b.abs() / model - 1.0).abs() < 1e-12, "m = {m}");
            assert_eq!(b < 0.0, m % 2 == 0);
        }
    }

    #[test]
    fn range_errors() {
        assert!(bernoulli_even(0).is_err());
        assert!(matches!(bernoulli_even(151), Err(ZetaError::Overflow { .. })));
        // B_{2m} leaves binary64 range well before 2m = 300
        assert!(matches!(bernoulli_even(140), Err(ZetaError::Overflow { .. })));
        assert!(bernoulli_even(120).unwrap().is_finite());
    }
}
