use classicalnf::ClassicalError;
use liebasis::BasisError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Input(String),
    /// A pivot that the case theorems need nonzero vanished at the actual
    /// coefficient values.
    #[error("non-algebraicity violated at grade {grade}: {detail}")]
    NonAlgebraic { grade: i64, detail: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
}
