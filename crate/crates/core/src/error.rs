use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected at least {min} multiplicities, got {got}")]
    TooFewFibers { min: usize, got: usize },

    #[error("split index {j} is outside 2..={max}")]
    SplitIndex { j: usize, max: usize },

    #[error("value {value} is below the minimum {min}")]
    OutOfRange { value: u64, min: u64 },

    #[error("{left} and {right} are not coprime")]
    NotCoprime { left: i128, right: i128 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("outside the domain of this method: {0}")]
    Domain(&'static str),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable, machine-readable classification used by front ends.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooFewFibers { .. } | Error::SplitIndex { .. } => "arity",
            Error::OutOfRange { .. } => "range",
            Error::NotCoprime { .. } => "not pairwise coprime",
            Error::Overflow(_) => "overflow",
            Error::Domain(_) => "domain",
            Error::InvariantViolation(_) => "invariant violation",
        }
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
