use thiserror::Error;

use crate::blade_core::AlgebraSig;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffError {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(AlgebraSig, AlgebraSig),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid idempotent: {0}")]
    InvalidIdempotent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Linear algebra produced fewer independent vectors than the structure
    /// theory requires. Always an internal bug.
    #[error("rank deficiency: {0}")]
    RankDeficiency(String),

    #[error("automorphism matrices could not be constructed: {0}")]
    Construction(String),

    #[error("group set not closed under multiplication: {0}")]
    NotClosed(String),

    #[error("relation check failed: {0}")]
    Relation(String),
}

pub type Result<T> = std::result::Result<T, CliffError>;
