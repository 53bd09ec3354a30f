//! Special functions shared by every zeta module.

mod bernoulli;
mod bessel;
mod gamma;
mod zeta;

pub use bernoulli::bernoulli_even;
pub(crate) use bernoulli::{bernoulli_even_exact, rational_to_f64};
pub use bessel::bessel_i_scaled;
pub use gamma::{digamma, gamma, log_gamma, recip_gamma};
pub use zeta::{completed_xi, riemann_zeta, riemann_zeta_deriv};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
