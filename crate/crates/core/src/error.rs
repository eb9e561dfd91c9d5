use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by every layer of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A configured size limit was hit before the computation finished.
    #[error("guard `{guard}` exceeded: reached {reached} (limit {limit})")]
    Guard {
        guard: &'static str,
        limit: usize,
        reached: usize,
    },

    #[error("instance exceeds desk scale: {0}")]
    DeskScale(String),

    #[error("empty tableau has no minimal box")]
    EmptyTableau,

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("exponent inside ideal")]
    ExponentInIdeal,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable sets differ")]
    VariableMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn guard(guard: &'static str, limit: usize, reached: usize) -> Self {
        Error::Guard {
            guard,
            limit,
            reached,
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. } | Error::DeskScale(_))
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Guard { .. } | Error::DeskScale(_) => 2,
            _ => 1,
        }
    }
}
