use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("loop edge on `{0}`")]
    LoopEdge(String),
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("improper coloring: {0}")]
    ImproperColoring(String),
    #[error("heaps live on different commutation graphs")]
    GraphMismatch,
    #[error("truncation degrees differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("cell ({vertex}, {height}) is not in the heap")]
    CellNotInHeap { vertex: usize, height: usize },
    #[error("constant term is not a unit")]
    NotInvertible,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("malformed animal: {0}")]
    MalformedAnimal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("value outside the domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
