//! Theta function and continued spectral zeta function of the flat torus
//! R^d/AZ^d for diagonal A.

use std::f64::consts::PI;

use crate::graph_zeta::DiagonalLattice;
use crate::quad::gauss_kronrod;
use crate::specfn::recip_gamma;
use crate::{ComplexValue, EvalResult, Result, ZetaError};

/// Enumerates the Laplace eigenvalues (2π)² Σ_j (k_j/a_j)² of the torus up to
/// a cutoff λ ≤ R², one entry per integer vector k.
#[derive(Debug, Clone)]
pub struct TorusEigenvalueEnumerator {
    a: Vec<f64>,
    radius: f64,
}

impl TorusEigenvalueEnumerator {
    pub fn new(lattice: &DiagonalLattice, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(ZetaError::domain("TorusEigenvalueEnumerator", "radius must be positive"));
        }
        Ok(TorusEigenvalueEnumerator {
            a: lattice.entries().iter().map(|&x| x as f64).collect(),
            radius,
        })
    }

    /// All eigenvalues λ ≤ R², sorted ascending (λ = 0 included).
    pub fn eigenvalues(&self) -> Vec<f64> {
        let r2 = self.radius * self.radius;
        let d = self.a.len();
        let bound: Vec<i64> = self
            .a
            .iter()
            .map(|a| (self.radius * a / (2.0 * PI)).floor() as i64)
            .collect();
        let scale: Vec<f64> = self.a.iter().map(|a| (2.0 * PI / a).powi(2)).collect();
        let mut out = Vec::new();
        let mut k: Vec<i64> = bound.iter().map(|b| -b).collect();
        loop {
            let lambda: f64 = (0..d).map(|j| scale[j] * (k[j] * k[j]) as f64).sum();
            if lambda <= r2 {
                out.push(lambda);
            }
            let mut j = 0;
            loop {
                if j == d {
                    out.sort_by(f64::total_cmp);
                    return out;
                }
                k[j] += 1;
                if k[j] <= bound[j] {
                    break;
                }
                k[j] = -bound[j];
                j += 1;
            }
        }
    }
}

/// Σ_{k≥1} e^{-c k²}, stopped once terms fall below 1e-20 of the running sum + 1.
fn gaussian_tail(c: f64) -> f64 {
    let mut sum = 0.0;
    let mut k = 1.0f64;
    loop {
        let term = (-c * k * k).exp();
        sum += term;
        if term < 1e-20 * (1.0 + sum) {
            return sum;
        }
        k += 1.0;
    }
}

/// Σ_{k∈Z} e^{-(2πk/a)² t} − 1 for one axis.
fn axis_excess(a: f64, t: f64) -> f64 {
    2.0 * gaussian_tail(4.0 * PI * PI * t / (a * a))
}

/// The Poisson-dual excess: Σ_{k∈Z} e^{-(2πk/a)² t} = a(4πt)^{-1/2}(1 + excess).
fn axis_dual_excess(a: f64, t: f64) -> f64 {
    2.0 * gaussian_tail(a * a / (4.0 * t))
}

/// Π(1 + e_j) − 1 without cancellation.
fn product_minus_one(excess: impl Iterator<Item = f64>) -> f64 {
    excess.fold(0.0, |p, e| p + e + p * e)
}

fn entries(lattice: &DiagonalLattice) -> Vec<f64> {
    lattice.entries().iter().map(|&x| x as f64).collect()
}

/// θ_A(t) = Σ_λ e^{-λt} over the torus eigenvalues, k = 0 included.
pub fn torus_theta(lattice: &DiagonalLattice, t: f64) -> Result<EvalResult<f64>> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(ZetaError::domain("torus_theta", format!("need t > 0, got {t}")));
    }
    let mut value = 1.0;
    for a in entries(lattice) {
        // the dual series converges faster once 4π²t/a² drops below π
        let axis = if 4.0 * PI * t / (a * a) >= 1.0 {
            1.0 + axis_excess(a, t)
        } else {
            a / (4.0 * PI * t).sqrt() * (1.0 + axis_dual_excess(a, t))
        };
        value *= axis;
    }
    let abs_err = value * (4.0 * lattice.dim() as f64 + 2.0) * f64::EPSILON;
    Ok(EvalResult::new(value, abs_err))
}

/// θ_A(t) − 1, accurate for large t.
fn theta_minus_one(a: &[f64], t: f64) -> f64 {
    product_minus_one(a.iter().map(|&x| axis_excess(x, t)))
}

/// θ_A(t) − det A (4πt)^{-d/2}, accurate for small t.
fn theta_minus_volume_term(a: &[f64], t: f64) -> f64 {
    let det: f64 = a.iter().product();
    let lead = det * (4.0 * PI * t).powf(-(a.len() as f64) / 2.0);
    lead * product_minus_one(a.iter().map(|&x| axis_dual_excess(x, t)))
}

/// Smallest T ≥ 2 with weight·T^power·e^{-rate·T} below 1e-20.
fn truncation_point(rate: f64, power: f64, weight: f64) -> f64 {
    let mut t = 2.0f64;
    for _ in 0..50 {
        let next = (46.0 + weight.ln().max(0.0) + power.max(0.0) * t.ln()) / rate;
        if (next - t).abs() < 1e-3 {
            break;
        }
        t = next.max(2.0);
    }
    t
}

/// Spectral (Epstein) zeta function of R^d/AZ^d, continued to all s ≠ d/2:
///
/// ζ(s) = (1/Γ(s)) [∫_1^∞ (θ − 1) t^{s−1} dt + ∫_0^1 (θ − det A(4πt)^{−d/2}) t^{s−1} dt
///        + det A (4π)^{−d/2}/(s − d/2)] − 1/Γ(s + 1).
///
/// The second integral is taken over u = 1/t on [1, ∞).
pub fn zeta_real_torus(lattice: &DiagonalLattice, s: ComplexValue) -> Result<EvalResult> {
    let a = entries(lattice);
    let d = a.len() as f64;
    let half_d = d / 2.0;
    if (s - half_d).norm() < 1e-12 {
        return Err(ZetaError::pole("zeta_real_torus", s));
    }
    let det: f64 = a.iter().product();
    let a_max = a.iter().cloned().fold(0.0, f64::max);
    let a_min = a.iter().cloned().fold(f64::INFINITY, f64::min);

    let upper_t = truncation_point(4.0 * PI * PI / (a_max * a_max), s.re - 1.0, 2.0 * d);
    let upper_u = truncation_point(
        a_min * a_min / 4.0,
        half_d - s.re - 1.0,
        2.0 * d * det * (4.0 * PI).powf(-half_d),
    );

    let tol_abs = 1e-20;
    let tol_rel = 1e-14;
    let large_t = gauss_kronrod(
        &|t: f64| theta_minus_one(&a, t) * ((s - 1.0) * t.ln()).exp(),
        1.0,
        upper_t,
        tol_abs,
        tol_rel,
        400,
    );
    let small_t = gauss_kronrod(
        &|u: f64| theta_minus_volume_term(&a, 1.0 / u) * ((-s - 1.0) * u.ln()).exp(),
        1.0,
        upper_u,
        tol_abs,
        tol_rel,
        400,
    );
    let pole = det * (4.0 * PI).powf(-half_d) / (s - half_d);
    let rg = recip_gamma(s);
    let rg1 = recip_gamma(s + 1.0);
    let bracket = large_t.value + small_t.value + pole;
    let value = rg * bracket - rg1;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(ZetaError::overflow("zeta_real_torus", "non-finite result"));
    }
    let rounding = 8.0
        * f64::EPSILON
        * (rg.norm() * (large_t.abs_integral + small_t.abs_integral + pole.norm()) + rg1.norm());
    let abs_err = rg.norm() * (large_t.abs_err + small_t.abs_err) + rounding;
    Ok(EvalResult::new(value, abs_err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfn::riemann_zeta;

    fn lat(a: &[u64]) -> DiagonalLattice {
        DiagonalLattice::unscaled(a.to_vec()).unwrap()
    }

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn theta_leading_shells() {
        let one = lat(&[1]);
        let t1 = torus_theta(&one, 1.0).unwrap().value;
        assert!((t1 - (1.0 + 2.0 * (-4.0 * PI * PI).exp())).abs() < 1e-15);
        assert!((torus_theta(&one, 10.0).unwrap().value - 1.0).abs() < 1e-15);
        let two = lat(&[1, 2]);
        for t in [1e-3, 1e-4] {
            let th = torus_theta(&two, t).unwrap().value;
            assert!((th * 4.0 * PI * t / 2.0 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_matches_enumerated_eigenvalues() {
        let l = lat(&[1, 2, 3]);
        let en = TorusEigenvalueEnumerator::new(&l, 60.0).unwrap();
        let eig = en.eigenvalues();
        assert_eq!(eig[0], 0.0);
        assert!(eig.windows(2).all(|w| w[0] <= w[1]));
        for t in [0.05, 0.3, 2.0] {
            let direct: f64 = eig.iter().map(|l| (-l * t).exp()).sum();
            let th = torus_theta(&l, t).unwrap();
            assert!((th.value - direct).abs() < 1e-13 * direct, "t = {t}");
        }
    }

    #[test]
    fn enumerator_counts_shells() {
        // (2π)²(k1² + k2²) ≤ (2π·1.5)² on the unit square: 9 points with |k|² ≤ 2
        let en = TorusEigenvalueEnumerator::new(&lat(&[1, 1]), 2.0 * PI * 1.5).unwrap();
        assert_eq!(en.eigenvalues().len(), 9);
        let en = TorusEigenvalueEnumerator::new(&lat(&[2]), 2.0 * PI * 1.0).unwrap();
        // k/2 with |k| ≤ 2
        assert_eq!(en.eigenvalues().len(), 5);
    }

    #[test]
    fn circle_matches_riemann_zeta() {
        let one = lat(&[1]);
        for s in [c(0.15, 0.0), c(0.35, 2.5), c(0.85, -5.0), c(1.7, 1.0), c(-1.3, 0.4)] {
            let expect = 2.0 * (-2.0 * s * (2.0 * PI).ln()).exp() * riemann_zeta(2.0 * s).unwrap();
            let got = zeta_real_torus(&one, s).unwrap();
            assert!((got.value - expect).norm() < 1e-9 * expect.norm(), "{s}: {} vs {expect}", got.value);
            assert!(got.abs_err < 1e-8 * expect.norm());
        }
    }

    #[test]
    fn value_at_zero_is_minus_one() {
        for a in [vec![1], vec![1, 2], vec![3, 1, 2]] {
            let v = zeta_real_torus(&lat(&a), c(0.0, 0.0)).unwrap().value;
            assert!((v.re + 1.0).abs() < 1e-12 && v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn square_torus_against_lattice_sum() {
        // (2π)^{-2s} Σ' |k|^{-2s} with an integral tail correction
        let s = 2.5;
        let radius_k = 300.0;
        let en = TorusEigenvalueEnumerator::new(&lat(&[1, 1]), 2.0 * PI * radius_k).unwrap();
        let head: f64 = en.eigenvalues().iter().skip(1).map(|l| l.powf(-s)).sum();
        let tail = (2.0 * PI).powf(-2.0 * s) * 2.0 * PI * radius_k.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0);
        let got = zeta_real_torus(&lat(&[1, 1]), c(s, 0.0)).unwrap().value;
        assert!((got.re / (head + tail) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn pole_and_residue() {
        let l = lat(&[1, 2]);
        assert!(zeta_real_torus(&l, c(1.0, 0.0)).unwrap_err().is_pole());
        let residue = 2.0 / (4.0 * PI);
        for dir in [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)] {
            let eps = 1e-6;
            let s = c(1.0, 0.0) + eps * dir;
            let v = zeta_real_torus(&l, s).unwrap().value * (s - 1.0);
            assert!((v - residue).norm() < 1e-6);
        }
    }
}
