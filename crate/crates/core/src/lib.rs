//! Representation data, special functions, length spectra and zeta
//! functions for closed or finite-volume hyperbolic manifolds of odd
//! dimension `d = 2n + 1`.

pub mod rootdata;
pub mod specfun;
pub mod spectrum;
pub mod summation;
pub mod verify;
pub mod zeta;

mod complex_parse;

pub use complex_parse::parse_complex;
