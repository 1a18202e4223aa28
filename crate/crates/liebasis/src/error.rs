use exactpoly::PolyError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("symbol {family}[{l},{k}] is not permissible")]
    NotPermissible { family: String, l: i64, k: i64 },
    #[error("field is not a classical normal form: offending term {term} in the {component}-component")]
    Shape { component: String, term: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid grading parameters: {0}")]
    InvalidScheme(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
