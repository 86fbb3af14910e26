//! Highest weights, branching and characters for `K = Spin(2n)` of type
//! `B_n`, `M = Spin(2n)` of type `D_n` and weights of `D_{n+1}`.
//!
//! Weights are exact half-integers. Characters are always evaluated as
//! weight sums, so they stay finite on singular torus elements.

mod branching;
mod tables;
mod virtual_rep;
mod weight;

use thiserror::Error;

pub use branching::{
    branch_k_to_m, casimir_shift, contragredient, decompose, is_w0_fixed, lambda_p_nbar, m_coeffs, nu_of_sigma,
    nu_sigma, restrict, spin_reps, split_nu_pm, tensor_product, tensor_with_spin, w0,
};
pub use tables::{
    character, dominant_multiplicities, dominant_representative, reflect_to_dominant, weight_multiplicities,
    weyl_dim, weyl_orbit, WeightTable,
};
pub use virtual_rep::VirtualRep;
pub use weight::{Family, GroupDesc, Half, Irrep, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("expected {expected} coordinates, got {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("weight {0} mixes integer and half-integer entries")]
    MixedParity(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("wrong group: {0}")]
    WrongGroup(String),
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("no nu+/nu- split: {0}")]
    NoSplit(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Parse and validate an `M`-weight for the manifold parameter `n`.
pub fn parse_m_weight(n: usize, s: &str) -> Result<Irrep, RootDataError> {
    Irrep::new(GroupDesc::m(n), s.parse()?)
}
