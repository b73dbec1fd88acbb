use thiserror::Error;

/// Broad failure classes. The CLI maps these onto process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Resource,
    Verification,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("decomposition width {width} exceeds the memory budget of {budget_bytes} bytes")]
    Resource { width: usize, budget_bytes: u64 },

    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("edges share an endpoint")]
    SharedEndpoint,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("gadget rejected: {0}")]
    UncertifiedGadget(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Json(_) | Error::Io(_) => ErrorKind::Parse,
            Error::OracleLimit { .. } | Error::Resource { .. } => ErrorKind::Resource,
            Error::Verification(_) => ErrorKind::Verification,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
