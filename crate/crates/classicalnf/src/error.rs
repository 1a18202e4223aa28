use exactpoly::{PolyError, Rational};
use liebasis::BasisError;
use thiserror::Error;

/// One entry of the linear part that differs from the expected matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryMismatch {
    /// Row variable (the component `row'`).
    pub row: String,
    /// Column variable.
    pub col: String,
    pub expected: Rational,
    pub got: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("linear part is not x' = 0, y' = z, z' = -y: {}{}", render(.mismatches), .hint.as_deref().map(|h| format!("; {h}")).unwrap_or_default())]
    LinearPart {
        mismatches: Vec<EntryMismatch>,
        hint: Option<String>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

fn render(m: &[EntryMismatch]) -> String {
    m.iter()
        .map(|e| format!("d{}/dt has {} * {} (expected {})", e.row, e.got, e.col, e.expected))
        .collect::<Vec<_>>()
        .join(", ")
}
