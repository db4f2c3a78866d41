//! Matching theory on loop-free multigraphs.
//!
//! Builds the `B`, `G`, `H` and `F` families of graphs in which maximum
//! matchings always leave two exposed vertices with a common neighbor,
//! checks such claims exactly (by enumerating every maximum matching) or by
//! structural certificates, and searches random regular multigraphs for more
//! examples.

pub mod cli;
pub mod families;
pub mod hunt;
pub mod matching;
pub mod multigraph;
pub mod verify;

pub use matching::{maximum_matching, Matching};
pub use multigraph::{Multigraph, VertexId, VertexLabel};
