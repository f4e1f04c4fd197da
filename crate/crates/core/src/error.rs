use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {id} out of range for graph with {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("quadruple spans components")]
    SpansComponents,

    #[error("instance too large for oracle: {cells} distance cells exceed cap of {cap}")]
    InstanceTooLarge { cells: usize, cap: usize },

    #[error("component containing vertex {0} is an isolated cycle")]
    IsolatedCycle(usize),

    #[error("vertex {0} has degree one; apply the degree-one pruning first")]
    DegreeOneVertex(usize),

    #[error("graph has minimum degree below two or contains isolated cycles")]
    NotCoverable,

    #[error("pattern has {size} vertices, above the cap of {cap}")]
    PatternTooLarge { size: usize, cap: usize },

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
