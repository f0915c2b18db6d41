use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a weight diagram needs at least one dot")]
    Empty,
    #[error("dots must be strictly increasing, got {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),
    #[error("weight coefficients must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a dot of the diagram")]
    NotADot(i64),
    #[error("diagrams have different numbers of dots ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("relative length {0} is odd")]
    OddRelativeLength(i64),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("move not applicable: {0}")]
    InapplicableMove(String),
    #[error("invalid step choice: {0}")]
    InvalidStep(String),
    #[error("not a function of the stated type: {0}")]
    InvalidFunction(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("step 2b safety counter exhausted after {0} consecutive applications")]
    SafetyCounterExhausted(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed input rather than an internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::SafetyCounterExhausted(_) | Error::Internal(_) | Error::Overflow(_)
        )
    }
}
