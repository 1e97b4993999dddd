use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidChar { ch: char, offset: usize },

    #[error("invalid integer token {0:?}")]
    InvalidToken(String),

    #[error("generator index 0 is not a valid letter")]
    ZeroIndex,

    #[error("generator index {index} is out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("strand count must be at least 2 (got {0})")]
    TooFewStrands(usize),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("cannot embed a {from}-strand word into {to} strands")]
    InvalidEmbedding { from: usize, to: usize },

    #[error("alpha format covers generators 1..=25 only; cannot render index {0}")]
    AlphaOverflow(usize),

    #[error("a positive word was required")]
    NotPositive,

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("sequence is not normal at position {0}")]
    NotNormal(usize),

    #[error("span {start}..={end} is not a handle of the word")]
    InvalidHandle { start: usize, end: usize },

    #[error("step budget of {0} exhausted")]
    BudgetExhausted(u64),

    #[error("n = {n} exceeds the enumeration bound {max}")]
    TooLargeForEnumeration { n: usize, max: usize },
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
