//! Spectral zeta function of the lattice graph Z^d through its heat-kernel
//! diagonal (e^{-2t} I_0(2t))^d.
//!
//! The Mellin integral is split at t0 = 1/(2d) and t1 = 16. Below t0 the Taylor
//! series of the heat kernel is integrated term by term, between t0 and t1 the
//! integral is computed by quadrature, and above t1 the 1/t expansion is
//! integrated term by term. Each piece continues analytically in s.

use std::f64::consts::PI;

use crate::quad::gauss_kronrod;
use crate::specfn::{bessel_i_scaled, recip_gamma};
use crate::{ComplexValue, EvalResult, Result, ZetaError};

const SMALL_T_CAP: usize = 60;
const LARGE_T_CAP: usize = 10;
const LARGE_SPLIT: f64 = 16.0;
const LARGE_TERMS: usize = 48;
const SMALL_TERMS_MAX: usize = 160;

/// (e^{-2t} I_0(2t))^d, the return probability of the continuous-time walk.
pub fn heat_diag_zd(d: u32, t: f64) -> Result<f64> {
    if d == 0 {
        return Err(ZetaError::domain("heat_diag_zd", "dimension must be at least 1"));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(ZetaError::domain("heat_diag_zd", format!("need t ≥ 0, got {t}")));
    }
    Ok(bessel_i_scaled(0, 2.0 * t).powi(d as i32))
}

fn series_mul(p: &[f64], q: &[f64]) -> Vec<f64> {
    let n = p.len().min(q.len());
    (0..n)
        .map(|k| (0..=k).map(|j| p[j] * q[k - j]).sum())
        .collect()
}

fn series_pow(p: &[f64], d: u32) -> Vec<f64> {
    let mut out = vec![0.0; p.len()];
    out[0] = 1.0;
    for _ in 0..d {
        out = series_mul(&out, p);
    }
    out
}

fn small_t_uncapped(d: u32, n: usize) -> Vec<f64> {
    // e^{-2t} = Σ (-2)^k/k! t^k and I_0(2t) = Σ t^{2k}/(k!)²
    let mut exp = vec![0.0; n];
    let mut bessel = vec![0.0; n];
    let mut term = 1.0;
    for (k, e) in exp.iter_mut().enumerate() {
        *e = term;
        term *= -2.0 / (k + 1) as f64;
    }
    let mut term = 1.0;
    let mut k = 0;
    while 2 * k < n {
        bessel[2 * k] = term;
        k += 1;
        term /= (k * k) as f64;
    }
    series_pow(&series_mul(&exp, &bessel), d)
}

fn large_t_uncapped(d: u32, n: usize) -> Vec<f64> {
    // e^{-x} I_0(x) ~ (2πx)^{-1/2} Σ c_k x^{-k}, c_k = ((2k-1)!!)²/(k! 8^k); x = 2t
    let mut c = vec![0.0; n];
    let mut term = 1.0;
    for (k, ck) in c.iter_mut().enumerate() {
        *ck = term;
        let kk = (k + 1) as f64;
        term *= (2.0 * kk - 1.0).powi(2) / (8.0 * kk) / 2.0;
    }
    let lead = (4.0 * PI).powf(-(d as f64) / 2.0);
    series_pow(&c, d).into_iter().map(|x| x * lead).collect()
}

fn check_dim(function: &'static str, d: u32) -> Result<()> {
    if d == 0 {
        return Err(ZetaError::domain(function, "dimension must be at least 1"));
    }
    Ok(())
}

/// Taylor coefficients a_0..a_{N-1} of (e^{-2t} I_0(2t))^d at t = 0.
pub fn small_t_coeffs(d: u32, n: usize) -> Result<Vec<f64>> {
    check_dim("small_t_coeffs", d)?;
    if n == 0 || n > SMALL_T_CAP {
        return Err(ZetaError::domain(
            "small_t_coeffs",
            format!("need 1 ≤ N ≤ {SMALL_T_CAP}, got {n}"),
        ));
    }
    Ok(small_t_uncapped(d, n))
}

/// Coefficients b_0..b_{N-1} of the expansion Σ b_n t^{-n-d/2} as t → ∞.
pub fn large_t_coeffs(d: u32, n: usize) -> Result<Vec<f64>> {
    check_dim("large_t_coeffs", d)?;
    if n == 0 || n > LARGE_T_CAP {
        return Err(ZetaError::domain(
            "large_t_coeffs",
            format!("need 1 ≤ N ≤ {LARGE_T_CAP}, got {n}"),
        ));
    }
    Ok(large_t_uncapped(d, n))
}

/// Both expansions of the heat-kernel diagonal to a common order N.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSplit {
    pub d: u32,
    pub n: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl SeriesSplit {
    pub fn new(d: u32, n: usize) -> Result<Self> {
        Ok(SeriesSplit {
            d,
            n,
            a: small_t_coeffs(d, n)?,
            b: large_t_coeffs(d, n)?,
        })
    }

    /// Indices n with a_n < 0.
    pub fn negative_small_t_indices(&self) -> Vec<usize> {
        (0..self.a.len()).filter(|&i| self.a[i] < 0.0).collect()
    }
}

/// ζ_{Z^d}(s), continued to all s except the simple poles s = d/2 + n, n ≥ 0.
pub fn zeta_zd(d: u32, s: ComplexValue) -> Result<EvalResult> {
    check_dim("zeta_zd", d)?;
    let half_d = d as f64 / 2.0;
    let m = (s.re - half_d).round().max(0.0);
    if (s - ComplexValue::new(half_d + m, 0.0)).norm() < 1e-12 {
        return Err(ZetaError::pole("zeta_zd", s));
    }
    let t0 = 0.5 / d as f64;
    let t1 = LARGE_SPLIT;
    let rg = recip_gamma(s);

    // below t0: Σ a_n t0^{s+n}/(s+n) multiplied by 1/Γ(s), written as
    // a_n t0^{s+n} · s(s+1)…(s+n-1)/Γ(s+n+1) so that s = -n stays regular
    let a = small_t_uncapped(d, SMALL_TERMS_MAX);
    let log_t0 = t0.ln();
    let mut small = ComplexValue::new(0.0, 0.0);
    let mut small_abs = 0.0;
    let mut rising = ComplexValue::new(1.0, 0.0);
    for (n, &an) in a.iter().enumerate() {
        let q = rising * recip_gamma(s + (n + 1) as f64);
        let term = an * ((s + n as f64) * log_t0).exp() * q;
        small += term;
        small_abs += term.norm();
        rising *= s + n as f64;
        if n > 8 && term.norm() < 1e-18 * small.norm() && an.abs() * t0.powi(n as i32) < 1e-20 {
            break;
        }
    }

    let middle = gauss_kronrod(
        &|t: f64| bessel_i_scaled(0, 2.0 * t).powi(d as i32) * ((s - 1.0) * t.ln()).exp(),
        t0,
        t1,
        1e-300,
        1e-14,
        200,
    );

    // above t1: -Σ b_n t1^{s-n-d/2}/(s-n-d/2)
    let b = large_t_uncapped(d, LARGE_TERMS);
    let log_t1 = t1.ln();
    let mut large = ComplexValue::new(0.0, 0.0);
    let mut large_abs = 0.0;
    let mut last = 0.0;
    for (n, &bn) in b.iter().enumerate() {
        let e = s - (n as f64 + half_d);
        let term = -bn * (e * log_t1).exp() / e;
        large += term;
        large_abs += term.norm();
        last = term.norm();
    }

    let value = small + rg * (middle.value + large);
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(ZetaError::overflow("zeta_zd", "non-finite result"));
    }
    let rounding =
        8.0 * f64::EPSILON * (small_abs + rg.norm() * (middle.abs_integral + large_abs));
    let abs_err = rounding + rg.norm() * (middle.abs_err + last);
    Ok(EvalResult::new(value, abs_err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_zeta::{zeta_discrete_torus, zeta_z, DiagonalLattice};
    use crate::quad::exp_sinh;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn heat_kernel_values() {
        assert_eq!(heat_diag_zd(3, 0.0).unwrap(), 1.0);
        for (t, tol) in [(50.0, 1e-2), (500.0, 1e-3)] {
            let v = heat_diag_zd(1, t).unwrap() * (4.0 * PI * t).sqrt();
            assert!((v - 1.0).abs() < tol);
        }
        let grid: Vec<f64> = (0..50).map(|i| 0.1 * i as f64 * (1.0 + 0.1 * i as f64)).collect();
        for d in 1..4 {
            let vals: Vec<f64> = grid.iter().map(|&t| heat_diag_zd(d, t).unwrap()).collect();
            assert!(vals.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn small_t_coefficients() {
        for d in 1..6u32 {
            let a = small_t_coeffs(d, 3).unwrap();
            let df = d as f64;
            assert_eq!(a[0], 1.0);
            assert!((a[1] + 2.0 * df).abs() < 1e-14);
            assert!((a[2] - (2.0 * df * df + df)).abs() < 1e-13);
        }
        assert!(small_t_coeffs(2, 61).is_err());
        // truncated series at t = 1/4 against the Bessel evaluation
        for d in 1..4 {
            let a = small_t_coeffs(d, 12).unwrap();
            let t: f64 = 0.25;
            let approx: f64 = a.iter().enumerate().map(|(n, x)| x * t.powi(n as i32)).sum();
            let omitted = small_t_uncapped(d, 13)[12].abs() * t.powi(12);
            let diff = (approx - heat_diag_zd(d, t).unwrap()).abs();
            assert!(diff <= omitted.max(1e-16), "d = {d}: {diff:e} vs {omitted:e}");
        }
        let full = small_t_coeffs(3, 60).unwrap();
        assert!(full.iter().all(|x| *x != 0.0));
    }

    #[test]
    fn large_t_coefficients() {
        let b1 = large_t_coeffs(1, 2).unwrap();
        assert!((b1[0] - (4.0 * PI).powf(-0.5)).abs() < 1e-15);
        assert!((b1[1] - (4.0 * PI).powf(-0.5) / 16.0).abs() < 1e-15);
        let b2 = large_t_coeffs(2, 2).unwrap();
        assert!((b2[1] - 1.0 / (4.0 * PI) / 8.0).abs() < 1e-15);
        assert!(large_t_coeffs(1, 11).is_err());
        // residual fit: t^{3/2}(H(t) − b_0 t^{-1/2}) → b_1
        for t in [1e3f64, 1e4] {
            let fit = t.powf(1.5) * (heat_diag_zd(1, t).unwrap() - b1[0] / t.sqrt());
            assert!((fit / b1[1] - 1.0).abs() < 2.0 / t);
        }
    }

    #[test]
    fn line_case_matches_closed_form() {
        for s in [c(0.25, 0.0), c(-1.5, 2.0), c(0.3, 5.0), c(2.2, -1.0), c(-4.0, 0.0), c(3.9, 0.3)] {
            let got = zeta_zd(1, s).unwrap();
            let expect = zeta_z(s).unwrap();
            assert!((got.value - expect).norm() < 1e-10 * expect.norm(), "{s}");
        }
    }

    #[test]
    fn value_at_zero() {
        for d in 1..5 {
            let v = zeta_zd(d, c(0.0, 0.0)).unwrap().value;
            assert!((v - 1.0).norm() < 1e-12, "d = {d}: {v}");
        }
    }

    #[test]
    fn poles_at_half_integers_shifted() {
        for d in 1..4u32 {
            for n in 0..2 {
                let p = d as f64 / 2.0 + n as f64;
                assert!(zeta_zd(d, c(p, 0.0)).unwrap_err().is_pole());
                let v = zeta_zd(d, c(p + 1e-10, 0.0)).unwrap().value;
                assert!(1.0 / v.norm() < 1e-6);
            }
        }
        // d = 2 has no pole at s = 1/2
        assert!(zeta_zd(2, c(0.5, 0.0)).is_ok());
    }

    #[test]
    fn mellin_integral_in_convergence_strip() {
        for (d, s) in [(1u32, c(0.3, 0.5)), (2, c(0.7, -1.0)), (3, c(1.2, 2.0))] {
            let r = exp_sinh(
                &|t: f64, _| heat_diag_zd(d, t).unwrap() * ((s - 1.0) * t.ln()).exp(),
                0.0,
                1e-13,
            );
            let direct = r.value * recip_gamma(s);
            let got = zeta_zd(d, s).unwrap().value;
            assert!((got - direct).norm() < 1e-7 * direct.norm(), "{d} {s}");
        }
    }

    #[test]
    fn square_lattice_as_limit_of_tori() {
        let s = c(0.4, 0.0);
        let scaled = |n: u64| {
            let l = DiagonalLattice::new(vec![1, 1], n).unwrap();
            zeta_discrete_torus(&l, s).unwrap().re / (n * n) as f64
        };
        // leading correction is n^{2s-2}; eliminate it across n, 2n
        let (f1, f2, f4) = (scaled(200), scaled(400), scaled(800));
        let r = 2f64.powf(2.0 * s.re - 2.0);
        let e1 = (f2 - r * f1) / (1.0 - r);
        let e2 = (f4 - r * f2) / (1.0 - r);
        let got = zeta_zd(2, s).unwrap().value.re;
        assert!((e2 - got).abs() < 1e-4 * got.abs(), "{e1} {e2} {got}");
    }
}
