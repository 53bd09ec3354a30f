use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use crate::specfn::log_gamma;
use crate::{ComplexValue, Result, ZetaError};

/// Nodes and weights of an n-point Gaussian rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

type RuleKey = (u64, u64, usize);

fn cache() -> &'static RwLock<HashMap<RuleKey, Arc<GaussRule>>> {
    static CACHE: OnceLock<RwLock<HashMap<RuleKey, Arc<GaussRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (implicit QL with Wilkinson shifts).
/// `diag` is overwritten by the eigenvalues, `off[i]` couples i and i+1.
fn tridiagonal_eigen(diag: &mut [f64], off: &mut [f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut first = vec![0.0; n];
    if n == 0 {
        return Ok(first);
    }
    first[0] = 1.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(ZetaError::quadrature(
                    "gauss_jacobi_rule",
                    "eigenvalue iteration did not converge",
                ));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(first)
}

fn build_jacobi(alpha: f64, beta: f64, n: usize) -> Result<GaussRule> {
    let ab = alpha + beta;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    for (k, d) in diag.iter_mut().enumerate() {
        let kk = k as f64;
        let denom = (2.0 * kk + ab) * (2.0 * kk + ab + 2.0);
        *d = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / denom
        };
    }
    for k in 1..n {
        let kk = k as f64;
        let two = 2.0 * kk + ab;
        let b2 = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
        } else {
            4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab)
                / (two * two * (two + 1.0) * (two - 1.0))
        };
        off[k - 1] = b2.sqrt();
    }
    let first = tridiagonal_eigen(&mut diag, &mut off)?;
    let lg = |x: f64| {
        log_gamma(ComplexValue::new(x, 0.0))
            .map(|v| v.re)
            .map_err(|_| ZetaError::domain("gauss_jacobi_rule", "exponents must exceed -1"))
    };
    let mu0 = ((ab + 1.0) * 2f64.ln() + lg(alpha + 1.0)? + lg(beta + 1.0)? - lg(ab + 2.0)?).exp();
    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .zip(first)
        .map(|(x, v)| (x, mu0 * v * v))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    Ok(GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Gauss–Jacobi rule for the weight (1 − x)^alpha (1 + x)^beta on [-1, 1],
/// computed once per (alpha, beta, n) and cached.
pub fn gauss_jacobi_rule(alpha: f64, beta: f64, n: usize) -> Result<Arc<GaussRule>> {
    if !(alpha > -1.0 && beta > -1.0) || n == 0 {
        return Err(ZetaError::domain(
            "gauss_jacobi_rule",
            format!("need alpha, beta > -1 and n ≥ 1 (got {alpha}, {beta}, {n})"),
        ));
    }
    let key = (alpha.to_bits(), beta.to_bits(), n);
    if let Some(rule) = cache().read().ok().and_then(|m| m.get(&key).cloned()) {
        return Ok(rule);
    }
    let rule = Arc::new(build_jacobi(alpha, beta, n)?);
    if let Ok(mut m) = cache().write() {
        m.entry(key).or_insert_with(|| rule.clone());
    }
    Ok(rule)
}

/// Gauss–Chebyshev rule of the second kind (weight √(1 − x²)), in closed form.
pub fn chebyshev_u_rule(n: usize) -> GaussRule {
    let step = PI / (n as f64 + 1.0);
    let (nodes, weights) = (1..=n)
        .map(|k| {
            let th = k as f64 * step;
            (th.cos(), step * th.sin() * th.sin())
        })
        .unzip();
    GaussRule { nodes, weights }
}
