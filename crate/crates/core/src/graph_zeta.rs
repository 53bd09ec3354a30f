//! Spectral zeta functions of finite cycles, finite discrete tori and the
//! integer line graph, with their special values and derivative formula.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numeric::{cos_pi, distance_to_ladder, finite};
use crate::specfn::{digamma, log_gamma, rational_to_f64, recip_gamma, EULER_GAMMA};
use crate::{ComplexValue, NeumaierSum, Result, ZetaError};

const LN_4: f64 = 2.0 * LN_2;
const HALF_LN_PI: f64 = 0.572_364_942_924_700_1;

/// A diagonal integer matrix A = diag(a_1, …, a_d) with an optional scale n,
/// so that the scaled torus has sides a_i·n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalLattice {
    a: Vec<u64>,
    n: u64,
}

impl DiagonalLattice {
    pub fn new(a: Vec<u64>, n: u64) -> Result<Self> {
        if a.is_empty() {
            return Err(ZetaError::domain("DiagonalLattice", "dimension must be at least 1"));
        }
        if a.contains(&0) || n == 0 {
            return Err(ZetaError::domain("DiagonalLattice", "entries and scale must be positive"));
        }
        Ok(DiagonalLattice { a, n })
    }

    pub fn unscaled(a: Vec<u64>) -> Result<Self> {
        Self::new(a, 1)
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.a
    }

    pub fn scale(&self) -> u64 {
        self.n
    }

    pub fn with_scale(&self, n: u64) -> Result<Self> {
        Self::new(self.a.clone(), n)
    }

    /// det A (the unscaled entries).
    pub fn det(&self) -> f64 {
        self.a.iter().map(|&x| x as f64).product()
    }

    /// Side lengths a_i·n of the scaled discrete torus.
    pub fn sides(&self) -> Vec<u64> {
        self.a.iter().map(|&x| x * self.n).collect()
    }
}

fn require_n(function: &'static str, n: u64) -> Result<()> {
    if n < 2 {
        return Err(ZetaError::domain(function, format!("need n ≥ 2, got {n}")));
    }
    Ok(())
}

/// Σ_{k=1}^{n-1} sin(πk/n)^{-s}, pairing k with n − k.
pub fn sine_power_sum(n: u64, s: ComplexValue) -> Result<ComplexValue> {
    require_n("sine_power_sum", n)?;
    let nf = n as f64;
    let mut acc = NeumaierSum::new();
    if s.im == 0.0 {
        let e = -s.re;
        for k in 1..=(n - 1) / 2 {
            let x = (PI * (k as f64 / nf)).sin();
            acc.add_real(2.0 * x.powf(e));
        }
    } else {
        for k in 1..=(n - 1) / 2 {
            let l = (PI * (k as f64 / nf)).sin().ln();
            acc.add(2.0 * (-s * l).exp());
        }
    }
    if n.is_multiple_of(2) {
        acc.add_real(1.0);
    }
    finite("sine_power_sum", acc.total())
}

/// ζ of the cycle graph Z/nZ: 4^{-s} Σ sin(πk/n)^{-2s}.
pub fn zeta_cycle(n: u64, s: ComplexValue) -> Result<ComplexValue> {
    require_n("zeta_cycle", n)?;
    let sum = sine_power_sum(n, 2.0 * s)?;
    finite("zeta_cycle", (-s * LN_4).exp() * sum)
}

/// Distinct values of sin²(πk/N), 0 ≤ k ≤ N/2, with their multiplicities.
fn axis_spectrum(side: u64) -> Vec<(f64, f64)> {
    let nf = side as f64;
    (0..=side / 2)
        .map(|k| {
            let v = (PI * (k as f64 / nf)).sin();
            let mult = if k == 0 || 2 * k == side { 1.0 } else { 2.0 };
            (v * v, mult)
        })
        .collect()
}

/// ζ of the discrete torus Z^d/A_nZ^d: 4^{-s} Σ_{k≠0} (Σ_j sin²(πk_j/(a_j n)))^{-s}.
pub fn zeta_discrete_torus(lattice: &DiagonalLattice, s: ComplexValue) -> Result<ComplexValue> {
    let sides = lattice.sides();
    if sides.iter().all(|&x| x < 2) {
        return Err(ZetaError::domain(
            "zeta_discrete_torus",
            "at least one side must have length 2 or more",
        ));
    }
    let axes: Vec<Vec<(f64, f64)>> = sides.iter().map(|&x| axis_spectrum(x)).collect();
    let real = s.im == 0.0;
    let mut acc = NeumaierSum::new();
    let d = axes.len();
    let mut index = vec![0usize; d];
    // odometer over the reduced frequency box; the last axis runs innermost
    'outer: loop {
        let mut base = 0.0;
        let mut mult = 1.0;
        for j in 0..d - 1 {
            let (v, m) = axes[j][index[j]];
            base += v;
            mult *= m;
        }
        let last = &axes[d - 1];
        for (i, &(v, m)) in last.iter().enumerate() {
            if i == 0 && base == 0.0 {
                continue;
            }
            let lambda = base + v;
            let w = mult * m;
            if real {
                acc.add_real(w * lambda.powf(-s.re));
            } else {
                acc.add(w * (-s * lambda.ln()).exp());
            }
        }
        let mut j = d - 1;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            index[j] += 1;
            if index[j] < axes[j].len() {
                break;
            }
            index[j] = 0;
        }
    }
    finite("zeta_discrete_torus", (-s * LN_4).exp() * acc.total())
}

/// ζ of the integer line graph: Γ(1/2 − s) / (4^s √π Γ(1 − s)).
pub fn zeta_z(s: ComplexValue) -> Result<ComplexValue> {
    let (dist, _) = distance_to_ladder(s, 0.5, 0);
    if dist < 1e-12 {
        return Err(ZetaError::pole("zeta_z", s));
    }
    let lg = log_gamma(0.5 - s)?;
    finite("zeta_z", (lg - s * LN_4 - HALF_LN_PI).exp() * recip_gamma(1.0 - s))
}

/// The completed function 2^s cos(πs/2) ζ_Z(s/2), invariant under s ↦ 1 − s.
pub fn xi_z(s: ComplexValue) -> Result<ComplexValue> {
    let (dist, _) = distance_to_ladder(s, 1.0, 0);
    let m = s.re.round();
    let odd = m.rem_euclid(2.0) == 1.0;
    if odd && m > 0.0 && dist < 1e-6 {
        // removable singularity: average two samples straddling it
        let h = 1e-5;
        let a = xi_z_direct(s + h)?;
        let b = xi_z_direct(s - h)?;
        return Ok(0.5 * (a + b));
    }
    xi_z_direct(s)
}

fn xi_z_direct(s: ComplexValue) -> Result<ComplexValue> {
    let z = zeta_z(s / 2.0)?;
    finite("xi_z", (s * LN_2).exp() * cos_pi(s / 2.0) * z)
}

/// ζ_Z'(s) = ζ_Z(s)(−2 log 2 − ψ(1/2 − s) + ψ(1 − s)).
pub fn zeta_z_deriv(s: ComplexValue) -> Result<ComplexValue> {
    let (dist, _) = distance_to_ladder(s, 0.5, 0);
    if dist < 1e-12 {
        return Err(ZetaError::pole("zeta_z_deriv", s));
    }
    let m = s.re.round();
    if m >= 1.0 && (s - ComplexValue::new(m, 0.0)).norm() < 1e-12 {
        // ζ_Z has a simple zero at s = m; the derivative is
        // −Γ(1/2 − m) 4^{−m} π^{−1/2} (−1)^{m−1} (m−1)!
        let mm = m as i64;
        let lg = log_gamma(ComplexValue::new(0.5 - m, 0.0))?;
        let lf = log_gamma(ComplexValue::new(m, 0.0))?;
        let sign = if (mm - 1) % 2 == 0 { -1.0 } else { 1.0 };
        let v = (lg + lf - m * LN_4 - HALF_LN_PI).exp() * sign;
        return finite("zeta_z_deriv", v);
    }
    let z = zeta_z(s)?;
    let bracket = -LN_4 - digamma(0.5 - s)? + digamma(1.0 - s)?;
    finite("zeta_z_deriv", z * bracket)
}

/// Generalized binomial C(x/2, r) for an integer x, as an exact rational.
fn half_binomial(x: i64, r: u64) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(x - 2 * i as i64);
        den *= BigInt::from(2 * (i + 1));
    }
    BigRational::new(num, den)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Closed-form double-binomial evaluation of Σ_{k=1}^{n-1} sin(πk/n)^{-2a},
/// carried out in exact rational arithmetic and rounded once at the end.
pub fn inverse_even_sum_closed(n: u64, a: u64) -> Result<f64> {
    require_n("inverse_even_sum_closed", n)?;
    if !(1..=20).contains(&a) {
        return Err(ZetaError::domain(
            "inverse_even_sum_closed",
            format!("need 1 ≤ a ≤ 20, got {a}"),
        ));
    }
    let ni = n as i64;
    let ai = a as i64;
    let mut total = BigRational::zero();
    let four_a = BigInt::from(-4).pow(a as u32);
    for m in 0..=2 * a {
        let mut inner = BigRational::zero();
        for k in 0..=m + 1 {
            let c = binomial(m + 1, k);
            let lin = (m + 1) as i64 - 2 * k as i64;
            if lin == 0 {
                continue;
            }
            // C(a + kn + (m-1)/2, 2a+m) with the top written as x/2
            let x = 2 * ai + 2 * k as i64 * ni + m as i64 - 1;
            let b = half_binomial(x, 2 * a + m);
            let mut term = b * BigRational::new(c * BigInt::from(lin), BigInt::from(m + 1));
            if k % 2 == 1 {
                term = -term;
            }
            inner += term;
        }
        let weight = BigRational::new(
            &four_a * binomial(2 * a + 1, m + 1),
            BigInt::from(n).pow(m as u32),
        );
        total += weight * inner;
    }
    total = -total / BigRational::from_integer(BigInt::from(2));
    let v = rational_to_f64(&total);
    if !v.is_finite() {
        return Err(ZetaError::overflow(
            "inverse_even_sum_closed",
            "value exceeds binary64 range",
        ));
    }
    Ok(v)
}

/// Σ_{k=1}^{n-1} 1/sin(πk/n).
pub fn sine_sum_at_one(n: u64) -> Result<f64> {
    Ok(sine_power_sum(n, ComplexValue::new(1.0, 0.0))?.re)
}

/// Sign convention for Euler's constant in the logarithmic model of the
/// s = 1 sine sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaSign {
    Plus,
    Minus,
}

/// (2n/π)(log(2n/π) ± γ).
pub fn waldvogel_model(n: u64, sign: GammaSign) -> Result<f64> {
    require_n("waldvogel_model", n)?;
    let x = 2.0 * n as f64 / PI;
    let g = match sign {
        GammaSign::Plus => EULER_GAMMA,
        GammaSign::Minus => -EULER_GAMMA,
    };
    Ok(x * (x.ln() + g))
}

/// The s = 1 sine sum with its residual against both sign conventions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaldvogelReport {
    pub n: u64,
    pub sum: f64,
    pub residual_plus: f64,
    pub residual_minus: f64,
}

pub fn waldvogel_report(n: u64) -> Result<WaldvogelReport> {
    let sum = sine_sum_at_one(n)?;
    Ok(WaldvogelReport {
        n,
        sum,
        residual_plus: sum - waldvogel_model(n, GammaSign::Plus)?,
        residual_minus: sum - waldvogel_model(n, GammaSign::Minus)?,
    })
}
