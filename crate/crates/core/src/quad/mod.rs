//! Quadrature rules used by the continuation integrals and the tree routes.

mod jacobi;
mod kronrod;
mod tanh_sinh;

pub use jacobi::{chebyshev_u_rule, gauss_jacobi_rule, GaussRule};
pub use kronrod::gauss_kronrod;
pub use tanh_sinh::{exp_sinh, tanh_sinh};

use crate::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: ComplexValue,
    pub abs_err: f64,
    /// Estimate of ∫|f|, used to judge cancellation.
    pub abs_integral: f64,
}
