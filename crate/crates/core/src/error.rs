use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge <{u},{v}> is invalid for n = {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("not a forest: {0}")]
    NotAForest(String),

    #[error("invalid Prufer sequence: {0}")]
    InvalidPrufer(String),

    #[error("node counts differ: {left} vs {right}")]
    NodeCountMismatch { left: usize, right: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("edge set is not a subset of the tree's edges")]
    NotSubset,

    #[error("enumeration of {requested} trees exceeds the configured limit of {limit}")]
    GuardExceeded { requested: u128, limit: u128 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("undecodable: {0}")]
    Undecodable(String),

    #[error("channel violation: {0}")]
    ChannelViolation(String),

    #[error("certification failure: {0}")]
    Certification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(
    what: &'static str,
    value: impl TryInto<i64>,
    range: impl Into<String>,
) -> Error {
    Error::OutOfRange {
        what,
        value: value.try_into().unwrap_or(i64::MAX),
        range: range.into(),
    }
}
