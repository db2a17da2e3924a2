use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid probability: {0}")]
    InvalidProbability(String),

    #[error("input contains no scenarios")]
    EmptyInput,

    #[error("scenario sets do not share a probability space: {0}")]
    SpaceMismatch(String),

    #[error("scale factor must be nonnegative")]
    NegativeScale,

    #[error("invalid confidence level: {0}")]
    InvalidLevel(String),

    #[error("no point reaches the requested level")]
    InfeasibleLevel,

    #[error("subset enumeration limited to {limit} scenarios, got {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("expected a univariate scenario set, got dimension {0}")]
    NotUnivariate(usize),

    #[error("conditioning event has probability zero")]
    EmptyCondition,

    #[error("measure requires a single efficient point, found {0}")]
    MultiplePleps(usize),

    #[error("invalid scalarization weights: {0}")]
    InvalidWeights(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidProbability(_) => "invalid_probability",
            Error::EmptyInput => "empty_input",
            Error::SpaceMismatch(_) => "space_mismatch",
            Error::NegativeScale => "negative_scale",
            Error::InvalidLevel(_) => "invalid_level",
            Error::InfeasibleLevel => "infeasible_level",
            Error::TooLarge { .. } => "too_large",
            Error::NotUnivariate(_) => "not_univariate",
            Error::EmptyCondition => "empty_condition",
            Error::MultiplePleps(_) => "multiple_pleps",
            Error::InvalidWeights(_) => "invalid_weights",
        }
    }
}
