use thiserror::Error;

/// Everything that can go wrong while building or solving an instance.
///
/// Indices carried by the variants are 1-based, like the rest of the public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PpmError {
    #[error("empty input")]
    EmptyInput,

    #[error("malformed token {0:?}")]
    MalformedToken(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("values are not pairwise distinct (repeated {0})")]
    DuplicateValues(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("embedding is not strictly increasing at position {0}")]
    NotIncreasing(usize),

    #[error("segment {index} is empty: [{left}, {right}]")]
    EmptySegment {
        index: usize,
        left: usize,
        right: usize,
    },

    #[error("value {value} at index {index} lies outside [1, {n}]")]
    OutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },

    #[error("segment {index} ends at {right} after segment {next} starts at {left}")]
    OrderViolation {
        index: usize,
        next: usize,
        right: usize,
        left: usize,
    },

    #[error("pattern length k = {k} exceeds text length n = {n} (k > n)")]
    PatternLongerThanText { n: usize, k: usize },

    #[error("instance too small: {0}")]
    InstanceTooSmall(String),

    #[error("instance too large: n = {n} exceeds the cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, PpmError>;
