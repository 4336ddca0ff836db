use thiserror::Error;

use crate::graph::{Edge, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric parameter is outside the domain the operation accepts.
    #[error("parameter out of domain: {name} = {value}, requires {bound}")]
    ParameterDomain {
        name: &'static str,
        value: i64,
        bound: String,
    },

    /// A vertex coordinate, flat id or part index is out of range.
    #[error("index out of range: {0}")]
    IndexDomain(String),

    /// Both endpoints lie in the same part, so the pair is not a host edge.
    #[error("multipartite violation: {0} and {1} lie in the same part")]
    MultipartiteViolation(VertexId, VertexId),

    /// Construction parameters fail the construction's admissibility rule.
    #[error("inadmissible construction parameters: {0}")]
    Inadmissible(String),

    #[error("no closed-form size formula for {0}")]
    NoClosedForm(&'static str),

    /// The caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("edge {0} is already present")]
    EdgePresent(Edge),

    /// Input was required to be K_t-free; the witness is a K_t it contains.
    #[error("subgraph contains a K_{t}: {witness:?}")]
    ContainsClique { t: usize, witness: Vec<VertexId> },

    #[error("host has {edges} edges, exceeding the enumeration cap of {cap}")]
    EnumerationCap { edges: usize, cap: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: usize, bound: impl Into<String>) -> Self {
        Error::ParameterDomain {
            name,
            value: value as i64,
            bound: bound.into(),
        }
    }
}
