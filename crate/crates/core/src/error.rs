use thiserror::Error;

/// Everything that can go wrong while building or checking an expansion.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different rings or carry different truncations.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// An operation was applied outside its domain (exp of a unit, log away
    /// from 1, inverse of a non-unit, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("index {index} is beyond the truncation {limit}")]
    Range { index: usize, limit: usize },

    /// A theta prefactor (power of 2, q^(1/8) or pi) survived a ratio that
    /// should have cancelled it.
    #[error("uncancelled theta prefactor {0}")]
    Prefactor(String),

    /// Two computations that must agree did not.
    #[error("{what} disagree at q^({q_order}/2), internal degree {degree}")]
    Mismatch {
        what: String,
        q_order: usize,
        degree: u32,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
