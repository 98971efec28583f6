use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: String, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("modulus {0} is not prime")]
    NonPrime(u64),

    #[error("no cap rule given for variable `{0}`")]
    MissingCap(String),

    #[error("invalid ring description: {0}")]
    InvalidDescription(String),

    #[error("ring would have {required} elements, budget is {budget}")]
    RingBudget { required: u128, budget: u64 },

    #[error("relations do not give a well-defined multiplication: {0}")]
    IllDefined(String),

    #[error("ideal enumeration stopped after {found} ideals (budget {budget})")]
    IdealBudget { found: usize, budget: usize },

    #[error("monoid has at least {budget} elements (budget exhausted)")]
    MonoidBudget { budget: usize },

    #[error("ideals belong to different rings")]
    RingMismatch,

    #[error("ideal is not part of this lattice")]
    UnknownIdeal,

    #[error("generator `{0}` is not available in this monoid")]
    UnknownGenerator(char),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("invalid ordered monoid: {0}")]
    InvalidMonoid(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn syntax(position: impl ToString, message: impl ToString) -> Self {
        Error::Syntax {
            position: position.to_string(),
            message: message.to_string(),
        }
    }

    /// True for the errors that come from a resource budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::RingBudget { .. } | Error::IdealBudget { .. } | Error::MonoidBudget { .. }
        )
    }
}
