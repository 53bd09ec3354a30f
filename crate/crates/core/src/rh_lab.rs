//! Experiments on the cycle sine sums in the critical strip: h_n and its
//! generalization h_n[f], the ratio |h_n(1−s)/h_n(s)|, the multiple-zero
//! detector, the approximate functional equation of the completed cycle zeta,
//! expansion residual checks, and the monotonicity scan behind the ratio test.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::continuum_zeta::zeta_real_torus;
use crate::dd::{self, CDd, Dd};
use crate::graph_zeta::{sine_power_sum, zeta_cycle, zeta_discrete_torus, DiagonalLattice};
use crate::lattice_zeta::zeta_zd;
use crate::numeric::{cos_pi, log_log_slope, sin_pi_real};
use crate::quad::tanh_sinh;
use crate::specfn::{completed_xi, digamma, log_gamma, riemann_zeta};
use crate::{ComplexValue, EvalResult, NeumaierSum, Result, ZetaError};

const MAX_N: u64 = 100_000;
const HALF_LN_PI: f64 = 0.572_364_942_924_700_1;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Relative error beyond which strip values carry a precision warning.
pub const WARN_REL_ERR: f64 = 1e-6;

fn require_strip(function: &'static str, s: ComplexValue) -> Result<()> {
    if !(s.re > 0.0 && s.re < 1.0) {
        return Err(ZetaError::domain(
            function,
            format!("need 0 < Re s < 1, got Re s = {}", s.re),
        ));
    }
    Ok(())
}

fn require_n(function: &'static str, n: u64) -> Result<()> {
    if !(2..=MAX_N).contains(&n) {
        return Err(ZetaError::domain(function, format!("need 2 ≤ n ≤ {MAX_N}, got {n}")));
    }
    Ok(())
}

/// A warning line when the error estimate exceeds the relative budget.
pub fn precision_warning(r: &EvalResult) -> Option<String> {
    let rel = r.abs_err / r.value.norm();
    if rel > WARN_REL_ERR || !rel.is_finite() {
        Some(format!("relative error estimate {rel:.1e} exceeds {WARN_REL_ERR:.0e}"))
    } else {
        None
    }
}

/// Symmetric profile f on (0, 1) with f(0) = 0, f′(0) > 0, f″(0) = 0, f‴(0) ≠ 0.
#[derive(Clone)]
pub struct FunctionSpec {
    label: String,
    evaluate: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    sine: bool,
    pub d1_at_0: f64,
    pub d3_at_0: f64,
}

impl fmt::Debug for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionSpec")
            .field("label", &self.label)
            .field("d1_at_0", &self.d1_at_0)
            .field("d3_at_0", &self.d3_at_0)
            .finish()
    }
}

impl FunctionSpec {
    /// f(x) = sin(πx).
    pub fn sine() -> Self {
        FunctionSpec {
            label: "sin".into(),
            evaluate: Arc::new(sin_pi_real),
            sine: true,
            d1_at_0: PI,
            d3_at_0: -PI * PI * PI,
        }
    }

    /// f(x) = x − 2x³ + x⁴ = x(1 − x)(1 + x − x²).
    pub fn quartic() -> Self {
        FunctionSpec {
            label: "quartic".into(),
            evaluate: Arc::new(|x: f64| x * (1.0 - x) * (1.0 + x - x * x)),
            sine: false,
            d1_at_0: 1.0,
            d3_at_0: -12.0,
        }
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "sin" | "sine" => Ok(Self::sine()),
            "quartic" => Ok(Self::quartic()),
            other => Err(ZetaError::domain(
                "FunctionSpec",
                format!("unknown profile {other:?}; expected sin or quartic"),
            )),
        }
    }

    /// A user profile; the invariants are checked before it is accepted.
    pub fn custom<F>(label: &str, evaluate: F, d1_at_0: f64, d3_at_0: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let spec = FunctionSpec {
            label: label.into(),
            evaluate: Arc::new(evaluate),
            sine: false,
            d1_at_0,
            d3_at_0,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.evaluate)(x)
    }

    /// Symmetry on 50 points, positivity, and f(x)/x → f′(0).
    pub fn validate(&self) -> Result<()> {
        if !(self.d1_at_0 > 0.0) || self.d3_at_0 == 0.0 {
            return Err(ZetaError::domain("FunctionSpec", "need f′(0) > 0 and f‴(0) ≠ 0"));
        }
        for i in 1..=50 {
            let x = i as f64 / 51.0;
            let (a, b) = (self.eval(x), self.eval(1.0 - x));
            if !(a > 0.0) || (a - b).abs() > 1e-12 * a.abs().max(1.0) {
                return Err(ZetaError::domain(
                    "FunctionSpec",
                    format!("f must be positive and symmetric; fails at x = {x}"),
                ));
            }
        }
        for x in [1e-4, 1e-5] {
            if (self.eval(x) / x / self.d1_at_0 - 1.0).abs() > 1e-3 {
                return Err(ZetaError::domain("FunctionSpec", "f(x)/x does not approach f′(0)"));
            }
        }
        Ok(())
    }

    /// Σ_{j=1}^{n-1} f(j/n)^{-s}, pairing j with n − j.
    fn power_sum(&self, n: u64, s: ComplexValue) -> Result<ComplexValue> {
        if self.sine {
            return sine_power_sum(n, s);
        }
        let mut acc = NeumaierSum::new();
        let nf = n as f64;
        for j in 1..=(n - 1) / 2 {
            acc.add(2.0 * (-s * self.eval(j as f64 / nf).ln()).exp());
        }
        if n.is_multiple_of(2) {
            acc.add((-s * self.eval(0.5).ln()).exp());
        }
        Ok(acc.total())
    }

    /// ∫_0^1 f(x)^{-s} dx, folded onto (0, 1/2] and taken by tanh-sinh so the
    /// x^{-s} endpoint behavior is resolved.
    fn power_integral(&self, s: ComplexValue) -> Result<EvalResult> {
        if s.re >= 1.0 {
            return Err(ZetaError::quadrature(
                "h_n_general",
                "endpoint exponent makes the integral divergent",
            ));
        }
        let r = tanh_sinh(&|_x, da: f64, _db| (-s * self.eval(da).ln()).exp(), 0.0, 0.5, 1e-15);
        Ok(EvalResult::new(2.0 * r.value, 2.0 * r.abs_err))
    }
}

/// (1/√π) Γ(1/2 − s/2)/Γ(1 − s/2), the n-linear coefficient of the sine sum.
fn linear_coefficient(s: ComplexValue) -> Result<ComplexValue> {
    Ok((log_gamma(0.5 - s / 2.0)? - log_gamma(1.0 - s / 2.0)? - HALF_LN_PI).exp())
}

/// f′(0)^s π^{-s/2} Γ(s/2) n^{-s}.
fn strip_prefactor(d1: f64, s: ComplexValue, n: u64) -> Result<ComplexValue> {
    let lg = log_gamma(s / 2.0)?;
    Ok((s * d1.ln() - s / 2.0 * LN_PI + lg - s * (n as f64).ln()).exp())
}

/// h_n(s) = π^{s/2} Γ(s/2) n^{-s} (Σ sin(πk/n)^{-s} − n (1/√π)Γ(1/2−s/2)/Γ(1−s/2)).
pub fn h_n(s: ComplexValue, n: u64) -> Result<EvalResult> {
    require_strip("h_n", s)?;
    require_n("h_n", n)?;
    let sum = sine_power_sum(n, s)?;
    let lin = linear_coefficient(s)? * n as f64;
    let pre = strip_prefactor(PI, s, n)?;
    let value = pre * (sum - lin);
    let abs_err = 8.0 * f64::EPSILON * pre.norm() * (sum.norm() + lin.norm() + n as f64);
    Ok(EvalResult::new(value, abs_err))
}

/// α(s) = (s/3) π^{2−s/2} Γ(s/2) ζ(s − 2), the n^{-2} coefficient of h_n.
pub fn alpha(s: ComplexValue) -> Result<ComplexValue> {
    let lg = log_gamma(s / 2.0)?;
    let z = riemann_zeta(s - 2.0)?;
    Ok(s / 3.0 * ((2.0 - s / 2.0) * LN_PI + lg).exp() * z)
}

/// |h_n(1−s)/h_n(s)| for each n.
pub fn h_ratio_sequence(s: ComplexValue, n_list: &[u64]) -> Result<Vec<f64>> {
    require_strip("h_ratio_sequence", s)?;
    n_list
        .iter()
        .map(|&n| {
            let den = h_n(s, n)?.value;
            if den.norm() < 1e-14 {
                return Err(ZetaError::domain(
                    "h_ratio_sequence",
                    format!("|h_n(s)| < 1e-14 at n = {n}; ratio degenerate"),
                ));
            }
            Ok((h_n(1.0 - s, n)?.value / den).norm())
        })
        .collect()
}

/// h_n[f](s) = f′(0)^s π^{-s/2} Γ(s/2) n^{-s} [Σ f(j/n)^{-s} − n ∫_0^1 f^{-s}].
pub fn h_n_general(f: &FunctionSpec, s: ComplexValue, n: u64) -> Result<EvalResult> {
    require_strip("h_n_general", s)?;
    require_n("h_n_general", n)?;
    let sum = f.power_sum(n, s)?;
    let integral = f.power_integral(s)?;
    let lin = integral.value * n as f64;
    let pre = strip_prefactor(f.d1_at_0, s, n)?;
    let value = pre * (sum - lin);
    let abs_err = pre.norm()
        * (8.0 * f64::EPSILON * (sum.norm() + lin.norm() + n as f64) + n as f64 * integral.abs_err);
    Ok(EvalResult::new(value, abs_err))
}

/// The model h_n = 2ξ(s) + α(s) n^{-2}; with `zero_imposed` ξ is replaced by 0.
pub fn model_h(s: ComplexValue, n: f64, zero_imposed: bool) -> Result<ComplexValue> {
    let xi = if zero_imposed {
        ComplexValue::new(0.0, 0.0)
    } else {
        completed_xi(s)?
    };
    Ok(2.0 * xi + alpha(s)? / (n * n))
}

/// |model_h(1−s)/model_h(s)|.
pub fn model_ratio(s: ComplexValue, n: f64, zero_imposed: bool) -> Result<f64> {
    Ok((model_h(1.0 - s, n, zero_imposed)? / model_h(s, n, zero_imposed)?).norm())
}

/// c(s) = (1/(2√π)) Γ(1/2−s/2)/Γ(1−s/2) (ψ(1/2−s/2) − ψ(1−s/2)).
pub fn c_factor(s: ComplexValue) -> Result<ComplexValue> {
    let ratio = linear_coefficient(s)?;
    Ok(0.5 * ratio * (digamma(0.5 - s / 2.0)? - digamma(1.0 - s / 2.0)?))
}

/// −Σ log(sin(πk/n)) sin(πk/n)^{-s}, the s-derivative of the sine sum.
pub fn sine_log_sum(n: u64, s: ComplexValue) -> Result<ComplexValue> {
    require_n("sine_log_sum", n)?;
    let nf = n as f64;
    let mut acc = NeumaierSum::new();
    for k in 1..=(n - 1) / 2 {
        let l = sin_pi_real(k as f64 / nf).ln();
        acc.add(-2.0 * l * (-s * l).exp());
    }
    Ok(acc.total())
}

/// S(s, n) = c(s) n − Σ log(sin(πk/n))/sin(πk/n)^s; tends to 0 exactly at
/// multiple zeros of ζ.
pub fn multiple_zero_s(s: ComplexValue, n: u64) -> Result<ComplexValue> {
    require_strip("multiple_zero_s", s)?;
    require_n("multiple_zero_s", n)?;
    Ok(c_factor(s)? * n as f64 + sine_log_sum(n, s)?)
}

/// ξ_{Z/nZ}(s) = 2^s cos(πs/2) ζ_{Z/nZ}(s/2).
pub fn xi_cycle(n: u64, s: ComplexValue) -> Result<ComplexValue> {
    require_n("xi_cycle", n)?;
    Ok((s * std::f64::consts::LN_2).exp() * cos_pi(s / 2.0) * zeta_cycle(n, s / 2.0)?)
}

/// ξ_{Z/nZ}(s) − ξ_{Z/nZ}(1 − s).
pub fn approx_fe_diff(s: ComplexValue, n: u64) -> Result<ComplexValue> {
    require_strip("approx_fe_diff", s)?;
    Ok(xi_cycle(n, s)? - xi_cycle(n, 1.0 - s)?)
}

/// X(s) = 2π^{-s} cos(πs/2) ζ(s).
pub fn x_factor(s: ComplexValue) -> Result<ComplexValue> {
    Ok(2.0 * (-s * LN_PI).exp() * cos_pi(s / 2.0) * riemann_zeta(s)?)
}

/// Values against a sum of model terms, with the residual decay order.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub n_list: Vec<u64>,
    pub values: Vec<ComplexValue>,
    pub model_terms: Vec<(String, Vec<ComplexValue>)>,
    pub residuals: Vec<ComplexValue>,
    /// Least-squares slope of log|residual| against log n over the largest three n.
    pub fitted_order: Option<f64>,
}

impl ExpansionReport {
    fn build(
        n_list: &[u64],
        values: Vec<ComplexValue>,
        model_terms: Vec<(String, Vec<ComplexValue>)>,
    ) -> Self {
        let residuals: Vec<ComplexValue> = (0..n_list.len())
            .map(|i| values[i] - model_terms.iter().map(|(_, t)| t[i]).sum::<ComplexValue>())
            .collect();
        Self::with_residuals(n_list, values, model_terms, residuals)
    }

    fn with_residuals(
        n_list: &[u64],
        values: Vec<ComplexValue>,
        model_terms: Vec<(String, Vec<ComplexValue>)>,
        residuals: Vec<ComplexValue>,
    ) -> Self {
        let mut report = ExpansionReport {
            n_list: n_list.to_vec(),
            values,
            model_terms,
            residuals,
            fitted_order: None,
        };
        report.fitted_order = report.order_over_largest(3);
        report
    }

    /// Slope of log|residual| over the `k` largest n.
    pub fn order_over_largest(&self, k: usize) -> Option<f64> {
        let mut idx: Vec<usize> = (0..self.n_list.len()).collect();
        idx.sort_by_key(|&i| self.n_list[i]);
        let keep = &idx[idx.len().saturating_sub(k)..];
        let x: Vec<f64> = keep.iter().map(|&i| self.n_list[i] as f64).collect();
        let y: Vec<f64> = keep.iter().map(|&i| self.residuals[i].norm()).collect();
        log_log_slope(&x, &y)
    }

    /// Slope of log|residual| over every n.
    pub fn order_over_all(&self) -> Option<f64> {
        self.order_over_largest(self.n_list.len())
    }

    /// Model sum for row i.
    pub fn model_total(&self, i: usize) -> ComplexValue {
        self.model_terms.iter().map(|(_, t)| t[i]).sum()
    }
}

fn dd_cos_half_pi(s: CDd) -> CDd {
    let iz = s.scale(dd::PI.scale(0.5));
    let iz = CDd::new(-iz.im, iz.re);
    (iz.exp() + (-iz).exp()).scale(Dd::new(0.5))
}

fn dd_x_factor(s: CDd) -> CDd {
    (-(s.scale(dd::PI.ln()))).exp().scale(Dd::new(2.0)) * dd_cos_half_pi(s) * dd::zeta(s)
}

/// ξ_{Z/nZ}(s) − ξ_{Z/nZ}(1−s) against
/// X(s)n^s − X(1−s)n^{1−s} − (s/6)X(s−2)n^{s−2} + ((1−s)/6)X(−1−s)n^{−1−s}.
/// The cancellation of the n-linear parts leaves a residual far below binary64
/// resolution, so both sides are formed in double-double.
pub fn approx_fe_report(s: ComplexValue, n_list: &[u64]) -> Result<ExpansionReport> {
    require_strip("approx_fe_report", s)?;
    for &n in n_list {
        require_n("approx_fe_report", n)?;
    }
    let sd = CDd::from_c64(s);
    let one = CDd::real(Dd::ONE);
    let two = CDd::real(Dd::new(2.0));
    let sc = one - sd;
    let sixth = Dd::ONE / Dd::new(6.0);
    let k0 = dd_x_factor(sd);
    let k1 = -dd_x_factor(sc);
    let k2 = -(sd.scale(sixth) * dd_x_factor(sd - two));
    let k3 = sc.scale(sixth) * dd_x_factor(-one - sd);
    let (cos_s, cos_c) = (dd_cos_half_pi(sd), dd_cos_half_pi(sc));
    let mut values = Vec::new();
    let mut residuals = Vec::new();
    let mut terms: Vec<Vec<ComplexValue>> = vec![Vec::new(); 4];
    for &n in n_list {
        // 2^s cos(πs/2) ζ_{Z/nZ}(s/2) = cos(πs/2) Σ sin(πk/n)^{-s}
        let diff = cos_s * dd::sine_power_sum(n, sd) - cos_c * dd::sine_power_sum(n, sc);
        let ln = Dd::new(n as f64).ln();
        let p = |e: CDd| e.scale(ln).exp();
        let m = [k0 * p(sd), k1 * p(sc), k2 * p(sd - two), k3 * p(-one - sd)];
        residuals.push((diff - m[0] - m[1] - m[2] - m[3]).to_c64());
        values.push(diff.to_c64());
        for (t, v) in terms.iter_mut().zip(m) {
            t.push(v.to_c64());
        }
    }
    let names = ["X(s) n^s", "-X(1-s) n^(1-s)", "-(s/6) X(s-2) n^(s-2)", "((1-s)/6) X(-1-s) n^(-1-s)"];
    let model_terms = names.iter().map(|s| s.to_string()).zip(terms).collect();
    Ok(ExpansionReport::with_residuals(n_list, values, model_terms, residuals))
}

/// The discrete torus zeta of A_n against ζ_{Z^d}(s) det A n^d + ζ_{R^d/AZ^d}(s) n^{2s}.
pub fn theorem1_check(
    lattice: &DiagonalLattice,
    s: ComplexValue,
    n_list: &[u64],
) -> Result<ExpansionReport> {
    let d = lattice.dim() as f64;
    if !(s.re < d / 2.0 + 1.0) {
        return Err(ZetaError::domain(
            "theorem1_check",
            format!("need Re s < d/2 + 1 = {}", d / 2.0 + 1.0),
        ));
    }
    let lattice_part = zeta_zd(lattice.dim() as u32, s)?.value;
    let torus_part = zeta_real_torus(lattice, s)?.value;
    let det = lattice.det();
    let mut values = Vec::new();
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    for &n in n_list {
        let scaled = lattice.with_scale(n)?;
        values.push(zeta_discrete_torus(&scaled, s)?);
        let nf = n as f64;
        t1.push(lattice_part * det * nf.powi(lattice.dim() as i32));
        t2.push(torus_part * (2.0 * s * nf.ln()).exp());
    }
    let model = vec![
        ("zeta_Zd(s) det A n^d".to_string(), t1),
        ("zeta_torus(s) n^(2s)".to_string(), t2),
    ];
    Ok(ExpansionReport::build(n_list, values, model))
}

/// The sine sum against its three-term expansion
/// (1/√π)Γ(1/2−s/2)/Γ(1−s/2) n + 2π^{-s}ζ(s)n^s + (s/3)π^{2−s}ζ(s−2)n^{s−2},
/// evaluated in double-double arithmetic since the residual lies far below
/// binary64 resolution of the sum.
pub fn theorem3_check(s: ComplexValue, n_list: &[u64]) -> Result<ExpansionReport> {
    require_strip("theorem3_check", s)?;
    for &n in n_list {
        require_n("theorem3_check", n)?;
    }
    let sd = CDd::from_c64(s);
    let one = CDd::real(Dd::ONE);
    let half = CDd::real(Dd::new(0.5));
    let ln_pi = dd::PI.ln();
    let lin = (dd::ln_gamma(half - sd.scale(Dd::new(0.5)))
        - dd::ln_gamma(one - sd.scale(Dd::new(0.5))))
    .exp()
    .scale(Dd::ONE / dd::PI.sqrt());
    let z = dd::zeta(sd);
    let two = CDd::real(Dd::new(2.0));
    let z2 = dd::zeta(sd - two);
    let pi_s = (-(sd.scale(ln_pi))).exp();
    let c2 = pi_s.scale(Dd::new(2.0)) * z;
    let c3 = sd.scale(Dd::ONE / Dd::new(3.0)) * (two.scale(ln_pi)).exp() * pi_s * z2;
    let mut values = Vec::new();
    let mut terms: Vec<Vec<ComplexValue>> = vec![Vec::new(); 3];
    let mut residuals = Vec::new();
    for &n in n_list {
        let ln = Dd::new(n as f64).ln();
        let ns = sd.scale(ln).exp();
        let nd = Dd::new(n as f64);
        let sum = dd::sine_power_sum(n, sd);
        let m1 = lin.scale(nd);
        let m2 = c2 * ns;
        let m3 = c3 * ns / CDd::real(nd * nd);
        residuals.push((sum - m1 - m2 - m3).to_c64());
        values.push(sum.to_c64());
        terms[0].push(m1.to_c64());
        terms[1].push(m2.to_c64());
        terms[2].push(m3.to_c64());
    }
    let names = ["linear", "2 pi^-s zeta(s) n^s", "(s/3) pi^(2-s) zeta(s-2) n^(s-2)"];
    let model_terms = names.iter().map(|s| s.to_string()).zip(terms).collect();
    Ok(ExpansionReport::with_residuals(n_list, values, model_terms, residuals))
}

/// L(σ) = |ζ(s+2)/ζ(s−2)| against R(σ) = 4π²/|s²−1| along s = σ + it.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaScan {
    pub t: f64,
    pub sigma: Vec<f64>,
    pub left: Vec<f64>,
    pub right: Vec<f64>,
    pub left_increasing: bool,
    pub right_decreasing: bool,
    /// Grid indices i where left[i+1] ≤ left[i].
    pub violations: Vec<usize>,
    /// σ with L(σ) = R(σ), when the scan brackets one.
    pub crossing: Option<f64>,
}

fn lemma_sides(t: f64, sigma: f64) -> Result<(f64, f64)> {
    let s = ComplexValue::new(sigma, t);
    let l = (riemann_zeta(s + 2.0)? / riemann_zeta(s - 2.0)?).norm();
    let r = 4.0 * PI * PI / (s * s - 1.0).norm();
    Ok((l, r))
}

pub fn lemma_scan(t: f64, sigma_grid: &[f64]) -> Result<LemmaScan> {
    if sigma_grid.iter().any(|&x| !(x > 0.0 && x < 1.0)) {
        return Err(ZetaError::domain("lemma_scan", "σ grid must lie inside (0, 1)"));
    }
    if t.abs() < 1e-9 {
        return Err(ZetaError::domain("lemma_scan", "t must be nonzero"));
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &x in sigma_grid {
        let (l, r) = lemma_sides(t, x)?;
        left.push(l);
        right.push(r);
    }
    let violations: Vec<usize> = (0..left.len().saturating_sub(1))
        .filter(|&i| left[i + 1] <= left[i])
        .collect();
    let right_decreasing = right.windows(2).all(|w| w[1] < w[0]);
    let mut crossing = None;
    let gap = |x: f64| lemma_sides(t, x).map(|(l, r)| l.ln() - r.ln());
    if let (Some(&lo), Some(&hi)) = (sigma_grid.first(), sigma_grid.last()) {
        let (mut a, mut b) = (lo, hi);
        let (ga, gb) = (gap(a)?, gap(b)?);
        if ga.signum() != gb.signum() {
            let sa = ga.signum();
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if b - a < 1e-14 {
                    break;
                }
                if gap(m)?.signum() == sa {
                    a = m;
                } else {
                    b = m;
                }
            }
            crossing = Some(0.5 * (a + b));
        }
    }
    Ok(LemmaScan {
        t,
        sigma: sigma_grid.to_vec(),
        left,
        right,
        left_increasing: violations.is_empty(),
        right_decreasing,
        violations,
        crossing,
    })
}

/// ζ(σ) against the bound −σ/(1−σ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityReport {
    pub sigma: f64,
    pub zeta: f64,
    pub bound: f64,
    pub holds: bool,
}

pub fn negativity_check(sigma: f64) -> Result<NegativityReport> {
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(ZetaError::domain("negativity_check", "need 0 < σ < 1"));
    }
    let zeta = riemann_zeta(ComplexValue::new(sigma, 0.0))?.re;
    let bound = -sigma / (1.0 - sigma);
    Ok(NegativityReport {
        sigma,
        zeta,
        bound,
        holds: zeta <= bound,
    })
}

/// The averages (1/n)Σ sin(πk/n)^{-(1+it)}, which oscillate without limit.
#[derive(Debug, Clone, PartialEq)]
pub struct WintnerReport {
    pub t: f64,
    pub n_list: Vec<u64>,
    pub sequence: Vec<ComplexValue>,
    /// sequence minus its constant (n-linear) model part.
    pub oscillation: Vec<ComplexValue>,
    /// oscillation minus the 2π^{-s}ζ(s) n^{it} model.
    pub model_residual: Vec<ComplexValue>,
    pub amplitude: f64,
    pub model_amplitude: f64,
    pub max_gap: f64,
    pub max_residual: f64,
}

pub fn wintner_probe(t: f64, n_list: &[u64]) -> Result<WintnerReport> {
    if t == 0.0 || !t.is_finite() {
        return Err(ZetaError::domain("wintner_probe", "need t ≠ 0"));
    }
    let s = ComplexValue::new(1.0, t);
    let lin = linear_coefficient(s)?;
    let coef = 2.0 * (-s * LN_PI).exp() * riemann_zeta(s)?;
    let mut sequence = Vec::new();
    let mut oscillation = Vec::new();
    let mut model_residual = Vec::new();
    for &n in n_list {
        require_n("wintner_probe", n)?;
        let a = sine_power_sum(n, s)? / n as f64;
        let o = a - lin;
        let model = coef * ComplexValue::new(0.0, t * (n as f64).ln()).exp();
        sequence.push(a);
        oscillation.push(o);
        model_residual.push(o - model);
    }
    let amplitude = oscillation.last().map(|o| o.norm()).unwrap_or(0.0);
    let mut max_gap: f64 = 0.0;
    for i in 0..sequence.len() {
        for j in i + 1..sequence.len() {
            max_gap = max_gap.max((sequence[i] - sequence[j]).norm());
        }
    }
    let max_residual = model_residual.iter().map(|r| r.norm()).fold(0.0, f64::max);
    Ok(WintnerReport {
        t,
        n_list: n_list.to_vec(),
        sequence,
        oscillation,
        model_residual,
        amplitude,
        model_amplitude: coef.norm(),
        max_gap,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_zeta::zeta_z;
    use crate::specfn::{gamma, riemann_zeta_deriv};

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn strip_is_enforced() {
        assert!(h_n(c(1.0, 0.0), 10).is_err());
        assert!(h_n(c(0.0, 3.0), 10).is_err());
        assert!(h_n(c(0.5, 0.0), 1).is_err());
        assert!(h_n(c(0.5, 0.0), 100_001).is_err());
        assert!(multiple_zero_s(c(1.2, 0.0), 10).is_err());
    }

    #[test]
    fn h_n_matches_definition_through_cycle_zeta() {
        // (4π)^{s/2} Γ(s/2) n^{-s} (ζ_{Z/nZ}(s/2) − n ζ_Z(s/2))
        let s = c(0.4, 2.0);
        let n = 300;
        let direct = (s / 2.0 * (4.0 * PI).ln()).exp()
            * gamma(s / 2.0).unwrap()
            * (-s * (n as f64).ln()).exp()
            * (zeta_cycle(n, s / 2.0).unwrap() - n as f64 * zeta_z(s / 2.0).unwrap());
        let got = h_n(s, n).unwrap();
        assert!((got.value - direct).norm() < 1e-10 * direct.norm());
        assert!(precision_warning(&got).is_none());
    }

    #[test]
    fn h_n_converges_to_twice_xi() {
        let s = c(0.6, 3.0);
        let xi2 = 2.0 * completed_xi(s).unwrap();
        let ns = [500u64, 1000, 2000, 4000];
        let errs: Vec<f64> = ns.iter().map(|&n| (h_n(s, n).unwrap().value - xi2).norm()).collect();
        let x: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
        let order = log_log_slope(&x, &errs).unwrap();
        assert!((order + 2.0).abs() < 0.1, "order {order}");
        let s = c(0.5, 4.0);
        let n = 4000;
        let scaled = (h_n(s, n).unwrap().value - 2.0 * completed_xi(s).unwrap()) * (n * n) as f64;
        let a = alpha(s).unwrap();
        assert!((scaled - a).norm() < 0.01 * a.norm());
    }

    #[test]
    fn critical_line_symmetries() {
        let s = c(0.5, 0.0);
        assert_eq!(h_n(s, 50).unwrap().value, h_n(1.0 - s, 50).unwrap().value);
        for r in h_ratio_sequence(c(0.5, 7.3), &[10, 100, 1000]).unwrap() {
            assert!((r - 1.0).abs() < 1e-10);
        }
        let s = c(0.5, 7.0);
        assert!((alpha(1.0 - s).unwrap().norm() / alpha(s).unwrap().norm() - 1.0).abs() < 1e-10);
        let s = c(0.3, 2.0);
        assert!((alpha(s.conj()).unwrap() - alpha(s).unwrap().conj()).norm() < 1e-12 * alpha(s).unwrap().norm());
    }

    #[test]
    fn alpha_ratio_identity() {
        let s = c(0.3, 9.0);
        let lhs = (alpha(1.0 - s).unwrap() / alpha(s).unwrap()).norm();
        let rhs = (riemann_zeta(s + 2.0).unwrap() * (s - 1.0) * (s + 1.0)
            / (riemann_zeta(s - 2.0).unwrap() * 4.0 * PI * PI))
            .norm();
        assert!((lhs / rhs - 1.0).abs() < 1e-10);
    }

    #[test]
    fn ratio_tends_to_one_off_zeros() {
        let r = h_ratio_sequence(c(0.3, 5.0), &[500, 4000]).unwrap();
        assert!((r[1] - 1.0).abs() < 1e-3);
        assert!((r[1] - 1.0).abs() < (r[0] - 1.0).abs());
        let r = h_ratio_sequence(c(0.5, 14.134725), &[4000]).unwrap();
        assert!((r[0] - 1.0).abs() < 2e-2);
    }

    #[test]
    fn model_with_imposed_zero() {
        for s in [c(0.3, 14.0), c(0.5, 21.0), c(0.8, 30.0)] {
            let expect = (alpha(1.0 - s).unwrap() / alpha(s).unwrap()).norm();
            for n in [10.0, 1e3, 1e6] {
                let r = model_ratio(s, n, true).unwrap();
                assert!((r / expect - 1.0).abs() < 1e-12);
            }
            // without the zero the limit is 1
            assert!((model_ratio(s, 1e8, false).unwrap() - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn general_profile_agrees_with_sine() {
        let s = c(0.4, 2.0);
        let a = h_n_general(&FunctionSpec::sine(), s, 500).unwrap().value;
        let b = h_n(s, 500).unwrap().value;
        assert!((a - b).norm() < 1e-10 * b.norm());
        // the quartic profile needs the generic sum and quadrature path
        let q = FunctionSpec::quartic();
        q.validate().unwrap();
        let s = c(0.6, 3.0);
        let n = 4000;
        let h = h_n_general(&q, s, n).unwrap().value;
        let xi2 = 2.0 * completed_xi(s).unwrap();
        let model = -q.d3_at_0 / (q.d1_at_0 * PI * PI) * alpha(s).unwrap();
        let scaled = (h - xi2) * (n * n) as f64;
        assert!((scaled - model).norm() < 0.02 * model.norm());
    }

    #[test]
    fn profile_validation() {
        assert!(FunctionSpec::builtin("cubic").is_err());
        assert!(FunctionSpec::custom("skew", |x| x * (1.0 - x) * (1.0 + x), 1.0, 6.0).is_err());
        assert!(FunctionSpec::custom("sin2", |x: f64| (PI * x).sin(), PI, -PI.powi(3)).is_ok());
    }

    #[test]
    fn log_sum_is_derivative_of_sine_sum() {
        let s = c(0.4, 0.0);
        let n = 200;
        let fd = |h: f64| (sine_power_sum(n, s + h).unwrap() - sine_power_sum(n, s - h).unwrap()) / (2.0 * h);
        let rich = (100.0 * fd(1e-5) - fd(1e-4)) / 99.0;
        let got = sine_log_sum(n, s).unwrap();
        assert!((got - rich).norm() < 1e-6 * got.norm());
    }

    #[test]
    fn multiple_zero_statistic() {
        let grow: Vec<f64> = [100, 1000, 10_000]
            .iter()
            .map(|&n| multiple_zero_s(c(0.5, 0.0), n).unwrap().norm())
            .collect();
        assert!(grow[0] < grow[1] && grow[1] < grow[2]);
        let s = c(0.5, 14.134725);
        let ns = [1000u64, 2000, 4000, 8000];
        let vals: Vec<f64> = ns.iter().map(|&n| multiple_zero_s(s, n).unwrap().norm()).collect();
        let x: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
        let order = log_log_slope(&x, &vals).unwrap();
        assert!((order - 0.5).abs() < 0.1, "order {order}");
        // leading behavior 2π^{-s} ζ'(s) n^s at a simple zero
        let n = 8000.0;
        let lead = 2.0 * (-s * LN_PI).exp() * riemann_zeta_deriv(s).unwrap() * (s * f64::ln(n)).exp();
        assert!((vals[3] / lead.norm() - 1.0).abs() < 0.05);
    }

    #[test]
    fn approximate_functional_equation() {
        let s = c(0.3, 2.0);
        let scaled: Vec<f64> = [100u64, 1000, 10_000]
            .iter()
            .map(|&n| approx_fe_diff(s, n).unwrap().norm() / n as f64)
            .collect();
        assert!(scaled[0] > scaled[1] && scaled[1] > scaled[2]);
        let ns = [1000u64, 2000, 4000, 8000];
        let r = approx_fe_report(s, &ns).unwrap();
        let a = f64::max(s.re - 2.0, -1.0 - s.re);
        assert!(r.fitted_order.unwrap() <= a + 0.1, "{:?}", r.fitted_order);
        let real: Vec<f64> = ns.iter().map(|&n| approx_fe_diff(c(0.3, 0.0), n).unwrap().norm()).collect();
        let x: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
        let order = log_log_slope(&x, &real).unwrap();
        assert!((order - 0.7).abs() < 0.05, "order {order}");
    }

    #[test]
    fn discrete_torus_residual_checks() {
        let ns = [64u64, 128, 256, 512, 1024];
        let line = DiagonalLattice::unscaled(vec![1]).unwrap();
        let r = theorem1_check(&line, c(0.4, 0.0), &ns).unwrap();
        let scaled: Vec<f64> = (0..ns.len())
            .map(|i| r.residuals[i].norm() / (ns[i] as f64).powf(0.8))
            .collect();
        assert!(scaled.windows(2).all(|w| w[1] < w[0]), "{scaled:?}");
        assert!(r.fitted_order.unwrap() < 0.8);
        let plane = DiagonalLattice::unscaled(vec![1, 2]).unwrap();
        let r = theorem1_check(&plane, c(0.7, 0.0), &ns).unwrap();
        let scaled: Vec<f64> = (0..ns.len())
            .map(|i| r.residuals[i].norm() / (ns[i] as f64).powf(1.4))
            .collect();
        assert!(scaled.windows(2).all(|w| w[1] < w[0]), "{scaled:?}");
        let zero = theorem1_check(&plane, c(0.0, 0.0), &ns).unwrap();
        for v in &zero.residuals {
            assert_eq!(v.norm(), 0.0);
        }
    }

    #[test]
    fn three_term_residual_order() {
        let r = theorem3_check(c(0.3, 0.0), &[1000, 2000, 4000, 10_000]).unwrap();
        let order = r.order_over_all().unwrap();
        assert!(order <= 0.3 - 2.0 + 0.1, "order {order}");
    }

    #[test]
    fn even_two_example() {
        // (n² − 1)/3 = 2π^{-2}ζ(2)n² + (2/3)ζ(0) at s = 2
        let z2 = riemann_zeta(c(2.0, 0.0)).unwrap().re;
        let z0 = riemann_zeta(c(0.0, 0.0)).unwrap().re;
        for n in [5.0f64, 50.0] {
            let model = 2.0 / (PI * PI) * z2 * n * n + 2.0 / 3.0 * z0;
            assert!((model - (n * n - 1.0) / 3.0).abs() < 1e-12 * n * n);
        }
    }

    #[test]
    fn monotonicity_scan_at_thirty() {
        let grid: Vec<f64> = (1..=200).map(|i| i as f64 / 201.0).collect();
        let scan = lemma_scan(30.0, &grid).unwrap();
        assert!(scan.left_increasing && scan.right_decreasing);
        assert!((scan.crossing.unwrap() - 0.5).abs() < 1e-6);
        let small = lemma_scan(5.0, &grid).unwrap();
        assert!(small.right_decreasing);
        assert!(lemma_scan(30.0, &[0.0, 0.5]).is_err());
    }

    #[test]
    fn negativity() {
        let half = negativity_check(0.5).unwrap();
        assert!(half.holds && (half.zeta + 1.460_354_508_809_586_8).abs() < 1e-12);
        assert!(negativity_check(0.9).unwrap().holds);
        assert!(negativity_check(0.1).unwrap().holds);
        assert!(negativity_check(1.0).is_err());
    }

    #[test]
    fn wintner_oscillation() {
        let ns: Vec<u64> = (0..11).map(|i| 5000 + 500 * i).collect();
        let w = wintner_probe(5.0, &ns).unwrap();
        assert!((w.amplitude / w.model_amplitude - 1.0).abs() < 0.05);
        assert!((w.model_amplitude - 2.0 / PI * riemann_zeta(c(1.0, 5.0)).unwrap().norm()).abs() < 1e-12);
        assert!(w.max_gap > 10.0 * w.max_residual, "{} {}", w.max_gap, w.max_residual);
        assert!(wintner_probe(0.0, &ns).is_err());
    }
}
