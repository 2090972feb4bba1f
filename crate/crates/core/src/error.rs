use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid vertex set: {0}")]
    InvalidSet(String),
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("vertex {0} is a marker vertex")]
    MarkerVertex(usize),
    #[error("edge {0}-{1} is not marked")]
    NotMarked(usize, usize),
    #[error("orbit exceeded {0} states")]
    OrbitOverflow(usize),
    #[error("search budget of {0} states exhausted")]
    BudgetExhausted(u64),
    #[error("level {k} outside supported range: {reason}")]
    LevelOutOfRange { k: usize, reason: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
