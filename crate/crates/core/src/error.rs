//! Error types shared across the crate.

/// Errors produced by graph construction, cover handling and bound checks.
///
/// Resource exhaustion during a sweep is not an error: solver entry points
/// report caps through their result types so that a capped run can never be
/// mistaken for a proven answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cycle graphs need at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("fold must be at least 1")]
    FoldTooSmall,
    #[error("fold {0} exceeds the supported maximum of 64")]
    FoldTooLarge(u32),
    #[error("cover is invalid ({0} violation(s)); run validation for details")]
    InvalidCover(usize),
    #[error("cover is not full: edge ({u}, {v}) does not carry a bijection")]
    NotFull { u: usize, v: usize },
    #[error("cycle rank {required} exceeds the configured cap {cap}")]
    CycleRankExceeded { required: usize, cap: usize },
    #[error("cover space {fold}!^{rank} does not fit in 128 bits")]
    CoverSpaceOverflow { fold: u32, rank: usize },
    #[error("k = {k} is below the chromatic number {chi}")]
    KBelowChromatic { k: u32, chi: u32 },
    #[error("list-size table has wrong length: expected {expected}, got {got}")]
    ListSizeLength { expected: usize, got: usize },
    #[error("the order bound is defined for n >= 2, got {0}")]
    OrderTooSmall(u64),
    #[error("order {0} too large for exact evaluation")]
    OrderTooLarge(u64),
    #[error("operation requires order >= {required}, got {got}")]
    OrderBelowMinimum { required: usize, got: usize },
    #[error("cover declares order {found} but the graph has order {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("match on edge ({u}, {v}) repeats a source index and has no text form")]
    UnrepresentableMatch { u: usize, v: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Text-format failure with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError { line, msg: msg.into() }
    }
}
