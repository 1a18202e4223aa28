use classicalnf::ClassicalError;
use hypernf::HyperError;
use liebasis::BasisError;
use thiserror::Error;

/// Failure classes, one per exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("check failed: {0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Failure(_) => 3,
        }
    }
}

impl From<ClassicalError> for CliError {
    fn from(e: ClassicalError) -> Self {
        match e {
            ClassicalError::Precondition(s) => CliError::Precondition(s),
            ClassicalError::Basis(b) => b.into(),
            ClassicalError::LinearPart { .. } => CliError::Precondition(e.to_string()),
            ClassicalError::Poly(_) => CliError::Malformed(e.to_string()),
            ClassicalError::Internal(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<HyperError> for CliError {
    fn from(e: HyperError) -> Self {
        match e {
            HyperError::Precondition(s) => CliError::Precondition(s),
            HyperError::Basis(b) => b.into(),
            HyperError::Input(_) => CliError::Malformed(e.to_string()),
            HyperError::NonAlgebraic { .. } | HyperError::Internal(_) => CliError::Failure(e.to_string()),
            HyperError::Classical(c) => c.into(),
        }
    }
}

impl From<BasisError> for CliError {
    fn from(e: BasisError) -> Self {
        match e {
            BasisError::Precondition(s) => CliError::Precondition(s),
            other => CliError::Precondition(other.to_string()),
        }
    }
}
