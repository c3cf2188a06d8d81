//! Loop-less k-shortest-path search over weighted graphs, together with a
//! shortest-path-tree reduction that shrinks the graph before the search runs.
//!
//! The crate is `no_std` (it needs only `alloc`), so the search and reduction
//! code can run anywhere; file formats, timing, and the command-line front end
//! live in the companion `kspath-cli` crate.
//!
//! Modules:
//! - [`graph`]: adjacency-list graph plus deterministic benchmark generators
//! - [`sssp`]: Dijkstra shortest-path trees, single-root and all-pairs
//! - [`ksp`]: k-shortest-path searchers and an exhaustive reference enumerator
//! - [`reduction`]: by-way distances, vertex selection, and the
//!   reduce-then-search pipeline

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod graph;
pub mod ksp;
pub mod reduction;
pub mod sssp;

pub use graph::{Graph, GraphError, VertexId};
pub use ksp::{KspError, KspResult, Path};
pub use reduction::{ReducedGraph, ReductionStats};
pub use sssp::{Direction, ShortestPathTree};
