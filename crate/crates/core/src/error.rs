use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid terminal set: k = {k}, i = {i} for K_{{{a},{b}}}")]
    InvalidTerminalSet {
        a: usize,
        b: usize,
        k: usize,
        i: usize,
    },

    /// Shift capacity fails, so the requested tree would overlap an earlier one.
    #[error("tree {index} is not constructible: some window sum exceeds {b}")]
    NotConstructible { index: usize, b: usize },

    /// An invariant that the construction guarantees was violated.
    #[error("construction bug: {0}")]
    ConstructionBug(String),

    #[error("instance too large for exhaustive search: {0}")]
    InstanceTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
