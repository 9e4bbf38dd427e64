use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("composition parts must be positive: {0:?}")]
    ZeroPart(Vec<u32>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { inner: String, outer: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("size mismatch: {0} boxes vs {1} boxes")]
    SizeMismatch(usize, usize),

    #[error("enumeration exceeded the node limit of {0}")]
    LimitExceeded(u64),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("observed relation is not a partial order: {0}")]
    NotPartialOrder(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
