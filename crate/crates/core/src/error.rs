use thiserror::Error;

use crate::berge::BergeCycle;
use crate::hypergraph::Vertex;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge:?} has vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { edge: [Vertex; 3], vertex: Vertex, n: usize },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex([Vertex; 3]),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge([Vertex; 3]),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("hypergraph contains a Berge 4-cycle: {0}")]
    NotBc4Free(BergeCycle),
    #[error("hypergraph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<Vertex>),
}

pub type Result<T> = std::result::Result<T, Error>;
