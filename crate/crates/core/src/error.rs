use thiserror::Error;

/// Errors raised by the library. `kind` maps them onto CLI exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("form is not of the required degree: {0}")]
    WrongDegree(String),
    #[error("monomial {0} is not in the basis")]
    OutsideBasis(String),
    #[error("complex structure is not integrable: {0}")]
    NotIntegrable(String),
    #[error("d^2 does not vanish: {0}")]
    NotDifferential(String),
    #[error("parameters outside the family domain: {0}")]
    Domain(String),
    #[error("value is not exactly representable: {0}")]
    Unrepresentable(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no class matches fingerprint {0}")]
    NoMatch(String),
    #[error("fingerprint matches several classes: {0}")]
    Ambiguous(String),
    #[error("hermitian form is not positive definite")]
    NotPositive,
    #[error("matrix is singular")]
    Singular,
    #[error("internal consistency alarm: {0}")]
    Alarm(String),
}

/// Coarse error classes, one per CLI exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Alarm,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::Alarm(_) => ErrorKind::Alarm,
            _ => ErrorKind::Domain,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
