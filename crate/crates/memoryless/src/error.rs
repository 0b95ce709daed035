use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Alphabet parameters out of range (q < 2, n < 1, or q^n too large to index).
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    /// A state coordinate or state index outside the alphabet's range.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Two values built over different alphabets were combined.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    /// An image table that is not a bijection (or an instruction table whose
    /// fibers are not bijections).
    #[error("not a bijection: {0}")]
    NotBijective(String),

    /// An enumeration or search would exceed the configured cap.
    #[error("{what}: {count} exceeds cap {cap}")]
    TooLarge {
        what: String,
        count: String,
        cap: u64,
    },

    /// A routing graph that fails the regularity precondition.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Degenerate input for which the operation is undefined (e.g. n = 1
    /// routing graphs).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A (q, n) combination the requested construction does not cover.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// A generating-set construction failed its own audit (non-total case
    /// formula, non-bijective table, or wrong generated group).
    #[error("construction invalid: {0}")]
    ConstructionInvalid(String),

    /// The target element does not lie in the generated group.
    #[error("not computable: {0}")]
    NotComputable(String),

    /// An operation precondition that is the caller's responsibility.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text-format parse failure; line and column are 1-based.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
