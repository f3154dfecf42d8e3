use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfError {
    #[error("malformed rotation system: {0}")]
    MalformedPermutation(String),
    #[error("negative weight on dart {0}")]
    NegativeWeight(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("walk is not a contiguous walk in the graph: {0}")]
    NotEmbeddedWalk(String),
    #[error("walk is not simple")]
    NotSimple,
    #[error("walk is not closed")]
    NotCycle,
    #[error("face {0} is not a boundary face")]
    NotBoundary(usize),
    #[error("operation requires a surface without boundary")]
    HasBoundary,
    #[error("operation requires at least one boundary")]
    NoBoundary,
    #[error("operation requires at least two boundaries")]
    TooFewBoundaries,
    #[error("surface has genus zero")]
    GenusZero,
    #[error("vertex {0} is unreachable by finite-weight paths")]
    Unreachable(usize),
    #[error("cycle or arc is separating")]
    Separating,
    #[error("lift leaves the covering space at step {0}")]
    OutOfRange(usize),
    #[error("start vertex does not project to the walk's basepoint")]
    BasepointMismatch,
    #[error("no cycle of the requested class exists")]
    NoSuchCycle,
    #[error("weights are not symmetric on dart {0}")]
    AsymmetricWeights(usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = SurfError> = std::result::Result<T, E>;
