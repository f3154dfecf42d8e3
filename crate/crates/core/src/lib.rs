//! Shortest non-trivial cycles in weighted graphs embedded on orientable
//! surfaces, possibly with boundary.

pub mod builder;
pub mod cli;
pub mod corpus;
pub mod covers;
pub mod directed;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod homology;
pub mod oracle;
pub mod sides;
pub mod sssp;
pub mod surgery;
pub mod undirected;
pub mod weight;

pub use error::{Result, SurfError};
pub use graph::{CycleWalk, DartId, EmbeddedGraph, FaceId, SurfaceStats, VertexId};
pub use weight::Weight;
