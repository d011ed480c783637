use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("brute-force oracle limited to order {max}, got {order}")]
    OracleTooLarge { order: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("record: {0}")]
    Record(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
