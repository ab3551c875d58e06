//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice mismatch")]
    LatticeMismatch,
    #[error("zero vector")]
    ZeroVector,
    #[error("degenerate")]
    Degenerate,
    #[error("isotropic reflection vector")]
    IsotropicReflection,
    #[error("not in W")]
    NotInW,
    #[error("matrix does not preserve the bilinear form")]
    NotIsometry,
    #[error("isometry is not integral")]
    NotIntegral,
    #[error("not a generalized Kummer lattice")]
    NotKummer,
    #[error("{0}")]
    Domain(String),
    #[error("reduction failure: {0}")]
    ReductionFailure(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
