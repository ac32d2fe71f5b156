use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: dimension mismatches, mixed field descriptors,
    /// non-group Cayley tables, bad parameters.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An action tensor does not come from any coaction (the candidate
    /// coaction fails the comodule axioms).
    #[error("module is not rational: {0}")]
    NotRational(String),

    /// One of the zig-zag identities for ev/db failed; this signals an
    /// antipode-convention bug upstream rather than bad user input.
    #[error("snake identity failed: {0}")]
    SnakeFailure(String),

    /// An operation required the inverse of a singular antipode matrix.
    #[error("antipode matrix is not invertible")]
    NonInvertibleAntipode,

    /// The right-integral space was zero where a nonzero integral was
    /// required. Cannot happen for verified finite-dimensional input;
    /// kept as a checked path rather than an assumption.
    #[error("right integral space is zero")]
    ZeroIntegral,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
