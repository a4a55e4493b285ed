use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    AboveCap { n: usize, cap: usize },

    /// A coefficient sequence that cannot come from a bipartite graph.
    #[error("sign pattern violation at coefficient a_{index}")]
    SignPatternViolation { index: usize },

    #[error("quadrature did not converge: estimate {estimate}, error bound {error_bound}")]
    NonConvergence { estimate: f64, error_bound: f64 },

    #[error("vertex {vertex} is not pendant")]
    NotPendant { vertex: usize },

    #[error("graph is not bipartite (odd cycle {odd_cycle:?})")]
    NotBipartite { odd_cycle: Vec<usize> },

    #[error("graph is not a tree")]
    NotATree,

    #[error("vertex set is not a cover")]
    NotACover,

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("({0}, {1}) is not an edge")]
    EdgeNotFound(usize, usize),

    #[error("pole at z = {re} + {im}i")]
    PoleAt { re: f64, im: f64 },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    /// An ordering chain that failed exact verification.
    #[error("order chain violated: {0}")]
    ChainViolation(String),
}
