//! Spectral zeta functions of cycles, discrete and continuous tori, the
//! lattices Z^d and regular trees, together with the numerical experiments
//! that probe their asymptotic expansions and functional equations.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod acceptance;
pub mod continuum_zeta;
pub mod dd;
mod error;
pub mod graph_zeta;
pub mod lattice_zeta;
mod numeric;
pub mod quad;
pub mod rh_lab;
pub mod specfn;
pub mod tree_zeta;

pub use error::{Result, ZetaError};
pub use numeric::{EvalResult, NeumaierSum};

/// The universal complex scalar.
pub type ComplexValue = num_complex::Complex64;
