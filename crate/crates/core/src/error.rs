use thiserror::Error;

/// Errors produced by the coefficient engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("padding {partition}[{n}] is not a partition (need n >= {needed})")]
    PaddingBelowThreshold {
        partition: String,
        n: usize,
        needed: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("oracle scale exceeded: n = {n} is above the cap {cap}")]
    OracleScaleExceeded { n: usize, cap: usize },

    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),

    #[error("two-row rule does not apply: {0}")]
    RuleNotApplicable(String),

    #[error("invalid coloured partition: {0}")]
    InvalidColouredPartition(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for the errors that mean "no exact pathway at this size".
    pub fn is_scale(&self) -> bool {
        matches!(self, Error::OracleScaleExceeded { .. } | Error::ScaleExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
