use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{name}` at line {line}")]
    UnknownGenerator { name: String, line: usize },

    #[error("unknown corpus entry `{0}`")]
    UnknownCorpus(String),

    #[error("trivial character torus: the first Betti number is 0")]
    TrivialTorus,

    #[error("unsupported presentation class: {0}; supply the cup structure explicitly")]
    UnsupportedPresentation(String),

    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}
