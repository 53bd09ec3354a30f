//! Spectral zeta function of the (q+1)-regular tree, by quadrature against the
//! Kesten–McKay density and by the closed Appell F1 form.

use std::f64::consts::PI;

use crate::quad::{chebyshev_u_rule, gauss_jacobi_rule, tanh_sinh};
use crate::specfn::log_gamma;
use crate::{ComplexValue, EvalResult, Result, ZetaError};

const START_NODES: usize = 200;
const MAX_NODES: usize = 6400;
const AGREEMENT: f64 = 1e-12;

/// Branching parameter q > 1 with the derived F1 arguments u < 0 < v < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeSpec {
    pub q: f64,
    pub u: f64,
    pub v: f64,
}

impl TreeSpec {
    pub fn new(q: f64) -> Result<Self> {
        if !(q > 1.0 && q.is_finite()) {
            return Err(ZetaError::domain("TreeSpec", format!("need q > 1, got {q}")));
        }
        let r = q.sqrt();
        Ok(TreeSpec {
            q,
            u: -4.0 * r / ((r - 1.0) * (r - 1.0)),
            v: 4.0 * r / ((r + 1.0) * (r + 1.0)),
        })
    }

    pub fn degree(&self) -> f64 {
        self.q + 1.0
    }
}

/// Kesten–McKay density of the adjacency spectral measure at a vertex.
pub fn tree_spectral_density(q: f64, lambda: f64) -> Result<f64> {
    let spec = TreeSpec::new(q)?;
    let edge = 2.0 * spec.q.sqrt();
    if !(lambda.abs() <= edge) {
        return Err(ZetaError::domain(
            "tree_spectral_density",
            format!("|λ| must not exceed 2√q = {edge}"),
        ));
    }
    let k = spec.q + 1.0;
    let root = ((edge - lambda) * (edge + lambda)).max(0.0).sqrt();
    Ok(k / (2.0 * PI) * root / ((k - lambda) * (k + lambda)))
}

/// Repeats `rule(n)` with n doubling from 200 until two successive values agree.
fn doubling<F: FnMut(usize) -> Result<ComplexValue>>(
    function: &'static str,
    mut rule: F,
) -> Result<EvalResult> {
    let mut n = START_NODES;
    let mut prev = rule(n)?;
    loop {
        n *= 2;
        let next = rule(n)?;
        let diff = (next - prev).norm();
        if diff <= AGREEMENT * (1.0 + next.norm()) {
            return Ok(EvalResult::new(next, diff));
        }
        if n >= MAX_NODES {
            return Err(ZetaError::quadrature(
                function,
                format!("no agreement at {n} nodes (last change {diff:e})"),
            ));
        }
        prev = next;
    }
}

/// ζ_T(s) = ∫ (q+1−λ)^{−s} dμ(λ), by Gauss–Chebyshev quadrature after λ = 2√q·x.
pub fn zeta_tree_quadrature(q: f64, s: ComplexValue) -> Result<EvalResult> {
    let spec = TreeSpec::new(q)?;
    let k = spec.q + 1.0;
    let r = spec.q.sqrt();
    let scale = k / (2.0 * PI) * 4.0 * spec.q;
    doubling("zeta_tree_quadrature", |n| {
        let rule = chebyshev_u_rule(n);
        let mut acc = ComplexValue::new(0.0, 0.0);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let lambda = 2.0 * r * x;
            let base = k - lambda;
            acc += w / ((k - lambda) * (k + lambda)) * (-s * base.ln()).exp();
        }
        Ok(acc * scale)
    })
}

/// Appell F1(a; b1, b2; c; u, v) from Picard's Euler integral,
/// (Γ(c)/(Γ(a)Γ(c−a))) ∫_0^1 t^{a−1}(1−t)^{c−a−1}(1−ut)^{−b1}(1−vt)^{−b2} dt,
/// with Gauss–Jacobi nodes matched to the endpoint exponents (tanh-sinh when
/// the exponents are complex).
/// Requires Re c > Re a > 0 and u, v < 1.
pub fn appell_f1(
    a: ComplexValue,
    b1: ComplexValue,
    b2: ComplexValue,
    c: ComplexValue,
    u: f64,
    v: f64,
) -> Result<EvalResult> {
    if !(c.re > a.re && a.re > 0.0) {
        return Err(ZetaError::domain("appell_f1", "need Re c > Re a > 0"));
    }
    if !(u < 1.0 && v < 1.0) {
        return Err(ZetaError::domain("appell_f1", "need u < 1 and v < 1"));
    }
    let ca = c - a;
    let norm = (log_gamma(c)? - log_gamma(a)? - log_gamma(ca)?).exp();
    if a.im != 0.0 || ca.im != 0.0 {
        // oscillating endpoint powers defeat a real Jacobi weight
        let r = tanh_sinh(
            &|_t, t: f64, one_minus_t: f64| {
                ((a - 1.0) * t.ln() + (ca - 1.0) * one_minus_t.ln()
                    - b1 * (-u * t).ln_1p()
                    - b2 * (-v * t).ln_1p())
                .exp()
            },
            0.0,
            1.0,
            1e-14,
        );
        return Ok(EvalResult::new(r.value * norm, r.abs_err * norm.norm()));
    }
    // t = (1 + x)/2; the weight carries (1 − x)^alpha (1 + x)^beta
    let alpha = ca.re - 1.0;
    let beta = a.re - 1.0;
    let jac = 2f64.powf(-(alpha + beta) - 1.0);
    let value = doubling("appell_f1", |n| {
        let rule = gauss_jacobi_rule(alpha, beta, n)?;
        let mut acc = ComplexValue::new(0.0, 0.0);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let t = 0.5 * (1.0 + x);
            acc += w * (-b1 * (-u * t).ln_1p() - b2 * (-v * t).ln_1p()).exp();
        }
        Ok(acc * jac)
    })?;
    Ok(EvalResult::new(value.value * norm, value.abs_err * norm.norm()))
}

/// Closed form q(q+1)/((q−1)²(√q−1)^{2s}) · F1(3/2; s+1, 1; 3; u, v).
pub fn zeta_tree_closed(q: f64, s: ComplexValue) -> Result<EvalResult> {
    let spec = TreeSpec::new(q)?;
    let r = spec.q.sqrt();
    let f1 = appell_f1(
        ComplexValue::new(1.5, 0.0),
        s + 1.0,
        ComplexValue::new(1.0, 0.0),
        ComplexValue::new(3.0, 0.0),
        spec.u,
        spec.v,
    )?;
    let pre = spec.q * (spec.q + 1.0) / ((spec.q - 1.0) * (spec.q - 1.0))
        * (-2.0 * s * (r - 1.0).ln()).exp();
    Ok(EvalResult::new(pre * f1.value, pre.norm() * f1.abs_err))
}
