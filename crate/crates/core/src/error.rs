use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse set `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("query at n = {n} exceeds the set horizon {horizon}")]
    HorizonExceeded { n: usize, horizon: usize },

    #[error("operation requires a finite set, got {0}")]
    InfiniteSet(String),

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("k = {k} is outside the grid (K = {max})")]
    RowOutOfRange { k: usize, max: usize },

    #[error("word of length {len} too short for max_pre = {max_pre}, max_period = {max_period}")]
    WordTooShort {
        len: usize,
        max_pre: usize,
        max_period: usize,
    },

    #[error("root refinement did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("non-integral value {value} at k = {k}, n = {n}")]
    NonIntegral { k: usize, n: usize, value: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
