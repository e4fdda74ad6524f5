use thiserror::Error;

use crate::invariants::InvariantResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("relation {index} is not homogeneous")]
    NonHomogeneous { index: usize },

    #[error("degree cap {cap} exceeds the safety limit {limit}")]
    SafetyLimit { cap: u32, limit: u32 },

    #[error("{0} generators do not fit in a packed monomial at this degree cap")]
    TooManyGenerators(usize),

    #[error("degree {degree} exceeds the ring's degree cap {cap}")]
    DegreeOverflow { degree: u32, cap: u32 },

    /// The rewrite basis failed to reduce an element it should have reduced.
    /// Never expected; indicates an incomplete basis.
    #[error("internal reduction failure: {0}")]
    Reduction(String),

    #[error("monomial has {got} exponents but the ring has {expected} generators")]
    Arity { expected: usize, got: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("declared formal dimension {declared} but the top nonzero degree is {top:?}")]
    FormalDimension { declared: u32, top: Option<u32> },

    #[error("invalid parameters for {family}: {reason}")]
    Parameter {
        family: &'static str,
        reason: String,
    },

    #[error("unknown zero-divisor label `{0}`")]
    UnknownLabel(String),

    #[error("tensor square would have dimension {needed}, over the budget of {budget}")]
    TensorBudget { needed: u128, budget: u128 },

    #[error("search budget of {budget} nodes exhausted; best lower bound so far is {}", best.value)]
    SearchBudget {
        budget: usize,
        best: Box<InvariantResult>,
    },

    #[error("oracle unavailable: {0}")]
    OracleUnavailable(String),

    #[error("cannot parse space descriptor `{input}`: {reason}")]
    Descriptor { input: String, reason: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(family: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            family,
            reason: reason.into(),
        }
    }

    /// True for the errors that mean "ran out of budget" rather than "bad input".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::TensorBudget { .. }
                | Error::SearchBudget { .. }
                | Error::OracleUnavailable(_)
                | Error::SafetyLimit { .. }
                | Error::TooManyGenerators(_)
        )
    }
}
