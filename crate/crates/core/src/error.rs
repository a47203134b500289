use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("invalid family spec `{spec}`: {msg}")]
    Family { spec: String, msg: String },

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("solver invariant violated: {0}")]
    Invariant(String),

    #[error("census enumeration supports 1 <= n <= 8, got n = {0}")]
    CensusRange(usize),

    #[error("invalid corpus `{spec}`: {msg}")]
    Corpus { spec: String, msg: String },

    #[error("unknown theorem check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
