use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("shape error: {0}")]
    Shape(String),

    #[error("determinantal size cap exceeded: order {order} > cap {cap}")]
    SizeCapExceeded { order: usize, cap: usize },

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("matrix index {index} is too large (at most {max} allowed)")]
    IndexTooLarge { index: usize, max: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("rank-zero matrix has no rank factorization")]
    RankZero,

    #[error("methods disagree: {0}")]
    MethodDisagreement(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
