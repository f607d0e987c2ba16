use thiserror::Error;

use crate::cert::Certificate;

/// Errors raised by constructors and file loaders.
///
/// Failing an axiom check is not an error: check operations return a
/// [`Certificate`]. An error means the input could not be interpreted, or a
/// constructive operation was handed data violating its hypothesis.
#[derive(Debug, Error)]
pub enum AlgError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("hypothesis `{}` does not hold: {}", .0.check, .0.summary())]
    Hypothesis(Box<Certificate>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl AlgError {
    pub fn input(msg: impl Into<String>) -> Self {
        AlgError::Input(msg.into())
    }

    pub(crate) fn dim(context: &'static str, expected: usize, found: usize) -> Self {
        AlgError::Dimension {
            context,
            expected,
            found,
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgError>;

pub(crate) fn ensure_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgError::dim(context, expected, found))
    }
}

/// Turn a failed certificate into a hypothesis error.
pub(crate) fn require(cert: Certificate) -> Result<()> {
    if cert.passed() {
        Ok(())
    } else {
        Err(AlgError::Hypothesis(Box::new(cert)))
    }
}
