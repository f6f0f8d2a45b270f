use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Several improving moves share the maximal gain and the policy refuses
    /// to pick one.
    #[error("tie at state {state}: maximal improving moves {moves:?}")]
    Tie {
        state: String,
        moves: Vec<(usize, u8)>,
    },

    #[error("state space of {states} states exceeds the limit of {limit}")]
    Capacity { states: u128, limit: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Input lies outside the domain of a partial operation, e.g. asking for
    /// rule applications on an inadmissible symbol state.
    #[error("outside domain: {0}")]
    Domain(String),

    #[error("ambiguous rule priority at {state}: {rules:?}")]
    AmbiguousPriority { state: String, rules: Vec<String> },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
