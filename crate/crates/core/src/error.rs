use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar contexts differ: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} requires a torsion context (q a primitive p-th root of unity)")]
    RequiresTorsion(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{monomial} is not a Lie polynomial in A, B ({reason})")]
    NotLie { monomial: String, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed serialization: {0}")]
    Serialization(String),
}
