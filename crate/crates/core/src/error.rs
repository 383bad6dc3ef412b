use thiserror::Error;

/// Everything that can go wrong when building, parsing, or mapping the
/// objects in this crate. Indices reported here are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("columnwise maxima decrease at column {0}")]
    NotWeaklyIncreasing(usize),
    #[error("horizontal step present in a ballot path")]
    HorizontalStepPresent,
    #[error("path goes below the axis at step {0}")]
    BelowAxis(usize),
    #[error("weight out of range at step {0}")]
    WeightOutOfRange(usize),
    #[error("path does not end at height 0")]
    NotClosed,
    #[error("odd length")]
    OddLength,
    #[error("history is not fixed by rc")]
    NotRcFixed,
    #[error("not a snake")]
    NotASnake,
    #[error("not rc-invariant")]
    NotRcInvariant,
    #[error("not alternating")]
    NotAlternating,
    #[error("right valleys attached to left peak {peak} disagree on their bars")]
    InconsistentBars { peak: u32 },
    #[error("right valley at position {0} has no left peak to its left")]
    OrphanValley(usize),
    #[error("marked value {0} is not a cycle peak")]
    MarkNotCyclePeak(u32),
    #[error("marked value {0} is not at a left peak")]
    MarkNotLeftPeak(u32),
    #[error("no placeholder left for step {0}")]
    PlaceholderExhausted(usize),
    #[error("{0} placeholders remain after the last step")]
    MalformedHistory(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
