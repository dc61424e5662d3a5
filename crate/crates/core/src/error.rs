use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("line {line}: weight {weight} outside the open interval (0, 1)")]
    WeightOutOfRange { line: usize, weight: f64 },

    #[error("line {line}: duplicate weighted edge {src} -> {dst}")]
    DuplicateWeightedEdge {
        line: usize,
        src: String,
        dst: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid edge {src} -> {dst} for a graph with {n} nodes")]
    InvalidEdge { src: usize, dst: usize, n: usize },

    #[error("{0} requires an unweighted graph")]
    WeightedUnsupported(&'static str),

    #[error("{0} requires a weighted graph")]
    UnweightedUnsupported(&'static str),

    #[error(
        "graph has {components} weakly connected components; \
         take the largest weakly connected component first"
    )]
    Disconnected { components: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite log-likelihood {value} at gamma = {gamma}")]
    NonFinite { gamma: f64, value: f64 },

    #[error("observed edge count {observed} outside the attainable interval [{low}, {high}]")]
    DensityOutOfRange { observed: f64, low: f64, high: f64 },

    #[error("linear solve failed: {0}")]
    Singular(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
