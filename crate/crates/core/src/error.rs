use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The requested enumeration exceeds the configured oracle budget.
    #[error(
        "refusing to enumerate {n}-cycles: budget max_n = {max_n}, would visit {cycles} cycles"
    )]
    Budget {
        n: usize,
        max_n: usize,
        cycles: u128,
    },

    #[error("network error: {0}")]
    Network(String),

    /// The remote service answered with something we could not interpret.
    #[error("malformed response: {message}")]
    MalformedResponse { message: String, raw_body: String },

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
