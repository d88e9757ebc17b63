//! Prioritized graph Voronoi diagrams and the Balanced Vertex problem.
//!
//! Given a connected graph with unit-length edges, nonnegative vertex costs and
//! an ordered list of sites, every vertex belongs to its *first* closest site.
//! The load of a site is the total cost of its territory. The Balanced Vertex
//! problem asks for a new, lowest-priority site `v` minimizing the maximum load
//! of the diagram with respect to `S + v`.
//!
//! The crate provides:
//!
//! - [`voronoi`]: the diagram itself, exact per-candidate load evaluation and
//!   the quadratic brute-force solver used as the reference for everything else;
//! - [`elementary`]: linear-time solvers for cliques, diameter-two graphs,
//!   paths and cycles;
//! - [`tree`]: an `O(n log n)` centroid-decomposition solver for trees;
//! - [`rangetree`] and [`treewidth`]: a separator-based solver for graphs of
//!   bounded treewidth backed by weighted orthogonal range queries;
//! - [`interval`]: an `O(m + n log n)` solver for proper interval graphs;
//! - [`hardness`]: Hitting Set reductions and the hard-instance graph family;
//! - [`gen`]: random instance families used by tests and benchmarks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classes;
pub mod cost;
pub mod elementary;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hardness;
pub mod interval;
pub mod rangetree;
pub mod tree;
pub mod treewidth;
pub mod voronoi;

pub use cost::{Cost, CostVector};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, SiteList, Vertex};
pub use voronoi::{
    brute_force_balanced_vertex, prioritized_voronoi, witness_load, SolveResult, VoronoiDiagram,
    WitnessLoad,
};
