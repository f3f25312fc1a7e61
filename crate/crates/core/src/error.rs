use thiserror::Error;

/// Every failure mode of the library.
///
/// Validity and integrability failures carry the violated inequality as a
/// human-readable string so front ends can print it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: Gamma-type function evaluated at non-positive integer {0}")]
    Pole(f64),
    #[error("overflow: result not representable for argument {0}")]
    Overflow(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParam(String),
    #[error("outside the finite-orthogonality window: requires {requirement} ({detail})")]
    Validity { requirement: String, detail: String },
    #[error("integral diverges: requires {requirement} ({detail})")]
    Integrability { requirement: String, detail: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("parity error: term of degree {degree} cannot be homogenized to degree {target}")]
    Parity { degree: usize, target: usize },
    #[error("unsupported dimension d = {0} (supported: 1, 2, 3)")]
    UnsupportedDimension(usize),
    #[error("the eigenvalue equation needs q = 0, got q = {0}")]
    QNotZero(f64),
    #[error("the surface eigenvalue equation needs q = -1, got q = {0}")]
    QNotMinusOne(f64),
    #[error("degenerate data: {0}")]
    DegenerateData(String),
}

impl Error {
    pub(crate) fn validity(requirement: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Validity {
            requirement: requirement.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn integrability(requirement: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Integrability {
            requirement: requirement.into(),
            detail: detail.into(),
        }
    }

    /// The violated inequality, for errors that carry one.
    pub fn requirement(&self) -> Option<&str> {
        match self {
            Error::Validity { requirement, .. } | Error::Integrability { requirement, .. } => {
                Some(requirement)
            }
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
