use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable tuples differ: ({left}) vs ({right})")]
    VarMismatch { left: String, right: String },
    #[error("expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has shape {rows}x{cols}, expected {expected}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}
