use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("universe of size {0} exceeds the supported ceiling of {max}", max = crate::vertex_set::MAX_UNIVERSE)]
    UniverseTooLarge(usize),

    #[error("universe mismatch: expected {expected}, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("label {0:?} is duplicated or already in use")]
    DuplicateLabel(String),

    #[error("{what} exceeds the limit of {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("check failed ({check}): {detail}")]
    Violation { check: &'static str, detail: String },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
