//! Frontier solvers for unweighted single-source shortest paths.
//!
//! Two variants of the same boolean vector-matrix idea:
//!
//! * [`sssp_bovm`] probes each still-unreached node's in-neighbors (CSC) for
//!   membership in the reached set, exiting a column scan at the first hit.
//! * [`sssp_sovm`] pushes the current frontier along out-edges (CSR),
//!   settling only targets whose distance is still the sentinel. Each node
//!   enters the frontier at most once, so each directed edge is inspected at
//!   most once; total inspections equal the out-degree sum over the
//!   reachable set.
//!
//! Distances use sentinel 0 for "unreached"; the source reports 0 and is
//! guarded against ever being settled, so a cycle back to the source cannot
//! record a spurious length.

mod bovm;
mod frontier;
mod multi;
mod sovm;

pub use bovm::sssp_bovm;
pub use frontier::FrontierState;
pub use multi::{apsp_dense, apsp_stream, msssp, msssp_with_pool, DEFAULT_DENSE_LIMIT};
pub(crate) use multi::build_pool;
pub use sovm::sssp_sovm;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CscGraph, CsrGraph, NodeId};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("source node {source_node} out of range for {n} nodes")]
    SourceOutOfRange { source_node: NodeId, n: usize },
    #[error("variant bovm requires the CSC transpose, but none was supplied")]
    MissingCsc,
    #[error("dense all-pairs output refused: {n} nodes exceeds limit {limit}")]
    DenseLimitExceeded { n: usize, limit: usize },
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

/// Solver selection. `Auto` resolves to SOVM, the variant that wins on
/// sparse graphs; BOVM's dense-vector probing is kept for cross-checking
/// and for dense inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Bovm,
    Sovm,
    #[default]
    Auto,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bovm" => Ok(Self::Bovm),
            "sovm" => Ok(Self::Sovm),
            "auto" => Ok(Self::Auto),
            other => Err(format!("unknown variant {other:?} (expected bovm, sovm or auto)")),
        }
    }
}

/// Per-source distances plus instrumentation counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsspResult {
    pub source: NodeId,
    /// Length n; 0 means unreached, and the source itself reads 0.
    pub distance: Vec<u32>,
    /// Nodes with a finite path from the source, excluding the source.
    pub reached: u32,
    /// Frontier-expansion rounds that settled at least one node. Equals the
    /// source's eccentricity whenever it reaches anything, and is at most
    /// n − 1.
    pub iterations: u32,
    /// Adjacency entries examined.
    pub edge_inspections: u64,
    /// Outer-loop node visits: frontier nodes processed (SOVM) or unreached
    /// nodes probed (BOVM), summed over rounds.
    pub node_inspections: u64,
    /// Distance writes that landed on an already-settled node. The settle
    /// guards keep this at zero; it is counted at the write site so a broken
    /// guard shows up in results instead of silently corrupting a layer.
    pub settled_overwrites: u64,
}

impl SsspResult {
    pub fn new(source: NodeId, n: usize) -> Self {
        Self {
            source,
            distance: vec![0; n],
            reached: 0,
            iterations: 0,
            edge_inspections: 0,
            node_inspections: 0,
            settled_overwrites: 0,
        }
    }

    /// True when `node` has a finite distance from the source (the source
    /// counts). Lets callers tell "source" apart from "unreached" without
    /// re-deriving the sentinel convention.
    pub fn is_reached(&self, node: NodeId) -> bool {
        node == self.source || self.distance[node as usize] > 0
    }

    /// Writes `step` into `node`'s distance slot, recording the overwrite if
    /// the slot was already settled.
    #[inline]
    pub(crate) fn settle(&mut self, node: NodeId, step: u32) {
        if self.distance[node as usize] != 0 {
            self.settled_overwrites += 1;
        }
        self.distance[node as usize] = step;
        self.reached += 1;
    }
}

/// Dispatches to the selected variant. `Bovm` requires `csc`.
pub fn sssp(
    csr: &CsrGraph,
    csc: Option<&CscGraph>,
    source: NodeId,
    variant: Variant,
) -> Result<SsspResult, SolverError> {
    match variant {
        Variant::Sovm | Variant::Auto => sssp_sovm(csr, source),
        Variant::Bovm => sssp_bovm(csc.ok_or(SolverError::MissingCsc)?, source),
    }
}
