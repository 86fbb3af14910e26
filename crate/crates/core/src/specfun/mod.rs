//! Complex gamma-type functions and the explicit spectral-side functions:
//! `P_j`, `c_{j,l}`, `Omega`, its polynomial remainder `Q`, the Plancherel
//! polynomial and the c-function.

mod gamma;
mod harmonic;
mod omega;
mod poly;

use num_complex::Complex64;
use thiserror::Error;

pub use gamma::{digamma, gamma, is_pole, log_gamma, EULER_GAMMA};
pub use harmonic::{c_function, c_function_logderiv, log_c_function, plancherel_poly, resolvent_weights};
pub use omega::{
    c_jl, extract_q, omega_decomposed, omega_direct, omega_explicit_part, p_j, p_j_closed, p_j_closed_as_printed,
    pi_ratio, shifted_coords, Cjl,
};
pub use poly::EvenPolynomial;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecfunError {
    #[error("pole at {0}")]
    Pole(Complex64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("c_{{{j},{l}}} = {value} is not an integer")]
    Integrality { j: usize, l: String, value: f64 },
    #[error("polynomial fit failed: {0}")]
    FitFailure(String),
    #[error("gamma argument at a pole ({numerator} in numerator, {denominator} in denominator)")]
    GammaSingular { numerator: usize, denominator: usize },
}
