use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised by the knitting-graph toolkit.
///
/// Negative answers (an infeasible graph, a missing Hamiltonian path) are
/// not errors; they are returned as `None` or as a `false` verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex index {index} out of range for graph with {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph contains a cycle: {0:?}")]
    CycleDetected(Vec<VertexId>),
    #[error("graph is not a DAG")]
    NotADag,
    #[error("{count} arcs between {pair:?}; at most 3 are allowed")]
    MultiplicityTooHigh {
        pair: (VertexId, VertexId),
        count: usize,
    },
    #[error("arcs between {0:?} do not form a loop (same direction)")]
    InconsistentPair((VertexId, VertexId)),
    #[error("schema error at {context}: {message}")]
    SchemaError { context: String, message: String },
    #[error("purple edges are not supported here")]
    PurplePresent,
    #[error("uncolored edges present")]
    UncoloredPresent,
    #[error("vertex {vertex} (indeg {indeg}, outdeg {outdeg}) has no feasible role")]
    InfeasibleVertex {
        vertex: VertexId,
        indeg: usize,
        outdeg: usize,
    },
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("no eulerian path: {0}")]
    NoEulerianPath(String),
    #[error("degenerate layout at {0}")]
    DegenerateLayout(String),
    #[error("blue edges {0:?} and {1:?} cross")]
    BlueCrossing((VertexId, VertexId), (VertexId, VertexId)),
    #[error("layout is missing vertex {0}")]
    MissingPosition(VertexId),
    #[error("layout is not plane")]
    NotPlanarLayout,
    #[error("expected a single thread, found {0}")]
    NotSingleThread(usize),
    #[error("bad dimensions: {0}")]
    BadDims(String),
    #[error("invalid thread cover: {0}")]
    InvalidCover(String),
}

pub type Result<T> = std::result::Result<T, Error>;
