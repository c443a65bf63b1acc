use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid pair ({u}, {v})")]
    InvalidPair { u: usize, v: usize },

    #[error("edge {0:?} does not have three distinct vertices")]
    DegenerateEdge([usize; 3]),

    #[error("duplicate edge {0:?}")]
    DuplicateEdge([usize; 3]),

    #[error("edge {0:?} is not present")]
    MissingEdge([usize; 3]),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "codegree hypothesis not met: pair ({}, {}) has codegree {codegree} < {threshold}",
        pair.0, pair.1
    )]
    HypothesisNotMet {
        pair: (usize, usize),
        codegree: usize,
        threshold: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("soundness alarm: {0}")]
    SoundnessAlarm(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
