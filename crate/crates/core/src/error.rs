use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("order {n} exceeds the limit of {max} for this operation")]
    OrderTooLarge { n: usize, max: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("graph is disconnected; distances are undefined")]
    Disconnected,
    #[error(
        "power iteration did not converge after {iterations} iterations \
         (estimate {estimate}, residual {residual:e})"
    )]
    NoConvergence {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("report serialization failed: {0}")]
    Report(String),
}
