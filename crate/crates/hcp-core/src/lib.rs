//! Hamiltonian cycle detection via layered path holograms, plus the
//! brute-force oracles needed to check the decider against ground truth.
//!
//! The pipeline: expand a graph into a layered DAG (the *path hologram*),
//! fill a per-vertex table of *path sets* level by level with a
//! consistency-maintaining join, then reconstruct a cycle by backward
//! search over prefix intersections. Everything here is deterministic:
//! sets iterate in ascending vertex order and identical inputs produce
//! identical tables, traces, and cycles.
//!
//! The crate is `no_std` + `alloc`; IO, timing, and the CLI live in the
//! companion `hcp-harness` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod consistency;
pub mod graph;
pub mod hologram;
pub mod oracle;
pub mod pathset;
pub mod solver;

pub use graph::{Direction, EdgeKind, Graph, GraphError, VertexId};
pub use hologram::{Hologram, HologramVertex};
pub use pathset::{PathSet, SegmentSet};
pub use solver::{SolveOutcome, TieBreak, Verdict};
