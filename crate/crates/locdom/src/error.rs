use thiserror::Error;

/// Crate-wide error type.
///
/// `Input` covers malformed data (bad arcs, unparsable files) and maps to
/// exit code 2 in the CLI; everything else maps to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: loops, out-of-range ids, unparsable instance files.
    #[error("input error: {0}")]
    Input(String),

    /// A precondition of the requested operation does not hold
    /// (e.g. the digraph is not connected, not a local tournament,
    /// has twins, or lacks a supervising vertex).
    #[error("{0}")]
    Domain(String),

    /// The instance is too large for the exact search subroutines.
    #[error("search cutoff exceeded: {0}")]
    InfeasibleSize(String),

    /// A structural assertion that should hold by construction failed;
    /// indicates an inconsistent decomposition or an internal bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    /// A rejection-sampling generator exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            _ => 1,
        }
    }
}
