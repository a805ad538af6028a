use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge list contains no data lines")]
    EmptyInput,

    #[error("invalid snapshot policy: {0}")]
    InvalidPolicy(String),

    #[error("graph has no present nodes")]
    EmptyGraph,

    #[error("graph has no edges")]
    NoEdges,

    #[error("every snapshot in the series is empty")]
    EmptySeries,

    #[error("graphlet size must be 3 or 4, got {0}")]
    InvalidGraphletSize(usize),

    #[error("snapshots index different node universes ({0} vs {1} nodes)")]
    UniverseMismatch(usize, usize),

    #[error("at least 2 snapshots are needed for transitions, got {0}")]
    TooFewSnapshots(usize),

    #[error("value {0} lies outside [0, 1]")]
    OutOfUnitRange(f64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("at least {needed} networks are required, got {got}")]
    TooFewNetworks { needed: usize, got: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
