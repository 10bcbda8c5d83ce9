use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series over different r ({0} vs {1})")]
    RankMismatch(u32, u32),

    #[error("not invertible at this truncation")]
    NotInvertible,

    #[error("inexact division")]
    InexactDivision,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("size guard exceeded: r = {r}, n = {n} (limit n <= {limit})")]
    SizeGuard { r: u32, n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a character: {0}")]
    NotACharacter(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
