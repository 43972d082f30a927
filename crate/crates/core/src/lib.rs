//! Enumeration, counting and cross-verification of minimal separators and
//! potential maximal cliques in small undirected graphs.
//!
//! * [`graph`] and [`vertex_set`]: the graph value type and bitset vertex sets.
//! * [`format`]: the plain-text graph file format.
//! * [`separators`]: predicates, the `2^n` subset oracle, and the branching
//!   enumerator whose per-root leaf count is bounded by `φ^n`.
//! * [`families`]: melon, block and glued generators plus exact lower-bound
//!   formulas.
//! * [`triangulation`]: chordality, minimal triangulations and potential
//!   maximal cliques.
//! * [`cli`]: the command layer behind the `msep` binary.

pub mod cli;
pub mod families;
pub mod format;
pub mod graph;
pub mod separators;
pub mod triangulation;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use vertex_set::VertexSet;

/// The golden ratio `(1 + √5) / 2`.
pub const RHO: f64 = 1.618_033_988_749_895;
