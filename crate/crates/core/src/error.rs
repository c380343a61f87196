use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division is not exact (remainder in a-degree {a_degree})")]
    NonDivisible { a_degree: i32 },

    #[error("denominator is not a polynomial in q alone")]
    NonQDenominator,

    #[error("denominator vanishes: {0}")]
    VanishingDenominator(String),

    #[error("precision exhausted at {bits} bits (largest intermediate 2^{largest_log2:.0})")]
    PrecisionExhausted { bits: u32, largest_log2: f64 },

    #[error("invariant vanishes at this point, log is undefined ({0})")]
    VanishingValue(String),

    #[error("crossing budget exceeded ({crossings} crossings, limit {limit})")]
    CrossingBudget { crossings: usize, limit: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
