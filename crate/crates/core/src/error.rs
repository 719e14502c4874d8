use thiserror::Error;

use crate::ornament::Necklace;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,
    #[error("cannot parse `{0}` as a positive integer")]
    BadToken(String),
    #[error("value {0} appears more than once")]
    DuplicateValue(usize),
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("invalid block specification: {0}")]
    InvalidBlocks(String),
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("malformed ornament text: {0}")]
    MalformedOrnament(String),
    #[error("size mismatch: blocks cover {expected} elements but input has {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("unknown ornament filter `{0}` (expected all, theorem1 or good)")]
    UnknownFilter(String),
    #[error("color {color} is outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("ornament is not compatible with the block lengths")]
    Incompatible,
    #[error("ornament violates condition {condition} at necklace {necklace}")]
    ConditionViolated { condition: u8, necklace: Necklace },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
