//! Selberg and Ruelle zeta functions in their half-planes of convergence,
//! the normalizing factor of the symmetric zeta function and the ledger of
//! singularities predicted from model spectral data.

mod character;
mod ledger;
mod scan;
mod series;
mod xi;

use num_complex::Complex64;
use thiserror::Error;

use crate::rootdata::RootDataError;
use crate::specfun::SpecfunError;
use crate::spectrum::SpectrumError;

pub use character::{ClassCharacter, SplitCharacter};
pub use ledger::{ledger_merge, singularity_ledger, EigenEntry, LedgerReport, PoleEntry, Singularity, SpectralModel};
pub use scan::{grid, scan};
pub use series::{
    antisymmetric_sa, log_antisymmetric, log_ruelle_sigma, log_ruelle_tau, log_selberg, log_selberg_product,
    log_symmetrized, ruelle_selberg_factorization, selberg_z, symmetrized_s, FactorizationCheck,
};
pub use xi::{epsilon, log_xi_normalizer, log_xi_normalizer_derivative, xi_normalizer, XiData};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("outside the region of convergence: {0}")]
    Region(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error("model invariant violated: {0}")]
    Invariant(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl ZetaError {
    /// Region and truncation failures are both convergence problems.
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            ZetaError::Region(_)
                | ZetaError::Spectrum(SpectrumError::Convergence(_))
                | ZetaError::Spectrum(SpectrumError::InsufficientSpectrum { .. })
        )
    }
}

/// A value together with a certified bound for the neglected classes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaValue {
    pub value: Complex64,
    pub tail_bound: f64,
    /// Largest class length included.
    pub cutoff_used: f64,
}
