use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("group closure exceeded cap of {cap} elements ({found} found before stopping)")]
    GroupCapExceeded { cap: usize, found: usize },

    #[error("{what} of size {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("no elementary abelian minimal normal subgroup found (input group is not solvable?)")]
    NoMinimalNormal,

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("invalid brace: {0}")]
    InvalidBrace(#[from] crate::brace::BraceViolation),

    #[error("partition is not a congruence of the solution")]
    NotCongruence,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integer coordinate overflow")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
