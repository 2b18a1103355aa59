use thiserror::Error;

/// Everything that can go wrong while building, parsing or analysing a fuzzy graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("mu({u},{v}) = {mu} exceeds min(sigma({u}), sigma({v})) = {bound}")]
    MuExceedsSigma {
        u: String,
        v: String,
        mu: String,
        bound: String,
    },
    #[error("edge `{0}`-`{1}` has mu = 0")]
    ZeroMu(String, String),
    #[error("invalid vertex name `{0}`")]
    InvalidVertexName(String),
    #[error("invalid membership grade `{0}`")]
    InvalidMembership(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("no edge `{0}`-`{1}`")]
    NoSuchEdge(String, String),
    #[error("unknown vertex `{0}`")]
    NoSuchVertex(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("no strong path between `{0}` and `{1}`")]
    StrongDisconnected(String, String),
    #[error("invalid saturated cycle parameters: {0}")]
    BadSpec(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("graph has {0} vertices; brute force is limited to {limit}", limit = crate::oracle::MAX_VERTICES)]
    TooLarge(usize),
    #[error("graph is not a fuzzy tree")]
    NotAFuzzyTree,
}

impl Error {
    /// The underlying error with any line-number wrapper removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    /// Line number for errors raised while reading `.fzg` text.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Syntax { line, .. } | Error::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
