use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected m = {expected}, found m = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("alphabet size must be positive")]
    EmptyAlphabet,

    #[error("column {column} of a multi-composition is the zero vector")]
    ZeroColumn { column: usize },

    #[error("slot {slot} of a weak letter is 0; only positive integers and e are allowed")]
    ZeroSlot { slot: usize },

    #[error("the trivial composition has no descent set or letter map")]
    TrivialComposition,

    #[error("column index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid refinement set: {0}")]
    InvalidRefinement(String),

    #[error("composition parts sum to {parts}, word has length {len}")]
    CompositionLength { parts: usize, len: usize },

    #[error("a composition must consist of positive parts")]
    NonPositivePart,

    #[error("truncation level {level} is too small: need at least {needed}")]
    TruncationTooSmall { level: usize, needed: usize },

    #[error("series parameters differ ({0})")]
    SeriesMismatch(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
