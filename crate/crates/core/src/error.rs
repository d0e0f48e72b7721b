use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was called with arguments violating its contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A right-division by an atom or word that does not divide.
    #[error("division error: {0}")]
    Division(String),

    /// Malformed structure data (unknown names, broken composability, missing lcm entries).
    #[error("invalid structure: {0}")]
    Structure(String),

    /// Syntax or integrity error in an interchange file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Inconsistent run configuration (missing transport data, unsupported domain, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The structure and ordering produced a state the recursion cannot handle.
    /// This signals incomplete lcm tables rather than a bug in the caller.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}
