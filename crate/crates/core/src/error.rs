use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("hilbert function did not stabilize: {0}")]
    NotStabilized(String),

    #[error("value set is not contained in the ambient set")]
    NotContained,

    #[error("{module}: {what} diverged (cap {cap})")]
    Diverged {
        module: &'static str,
        what: &'static str,
        cap: usize,
    },

    #[error("negative local cohomology length {value} in degree {degree}")]
    NegativeCohomology { degree: i64, value: i64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invariant `{property}` violated on instance:\n{instance}")]
    InvariantViolation { instance: String, property: String },

    #[error("oracle mismatch at n = {n}: engine {engine}, oracle {oracle}")]
    OracleMismatch { n: i64, engine: u64, oracle: u64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Process exit code for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidInstance(_) | Error::PreconditionViolated(_) => 2,
            Error::InvariantViolation { .. }
            | Error::OracleMismatch { .. }
            | Error::TheoremViolation(_)
            | Error::NegativeCohomology { .. }
            | Error::NotContained
            | Error::HypothesisViolated(_) => 3,
            Error::Diverged { .. } | Error::NotStabilized(_) | Error::Overflow(_) => 4,
        }
    }
}
