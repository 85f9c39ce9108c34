//! Shortest-paths engine for unweighted directed and undirected graphs.
//!
//! The solvers replace the priority queue of a classic BFS with boolean
//! vector-matrix frontier expansion: BOVM probes in-neighbors over a CSC
//! matrix with early exit, SOVM pushes frontiers over CSR rows and touches
//! each directed edge at most once. A queue-BFS baseline and a matrix-power
//! path counter serve as independent correctness oracles, and a benchmark
//! harness reproduces the random-source / repeated-run / t-trimmed
//! measurement protocol with Gustafson-Barsis scaling efficiency.
//!
//! The `spe` binary fronts the library: `convert`, `sssp`, `apsp`, `stats`,
//! `bench` and `verify` subcommands.

pub mod bench;
pub mod cli;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use graph::{CscGraph, CsrGraph, EdgeList, NodeId};
pub use solver::{SsspResult, Variant};
