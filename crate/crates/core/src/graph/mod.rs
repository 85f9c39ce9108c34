//! Graph ingestion and structural analysis.
//!
//! Graphs are staged as an [`EdgeList`], then frozen into immutable
//! [`CsrGraph`] (out-adjacency) and [`CscGraph`] (in-adjacency) structures.
//! Node ids are 0-based `u32` throughout; undirected inputs are expanded to
//! symmetric directed edge pairs at the loading boundary, and `m` counts
//! directed edges everywhere.

mod csr;
pub mod gen;
pub mod io;
mod memory;
mod wcc;

pub use csr::{transpose, CscGraph, CsrGraph};
pub use memory::{memory_model, MemoryModel};
pub use wcc::{weakly_connected_components, WccSummary};

use thiserror::Error;

/// Node identifier. 4 bytes wide, matching the adjacency-array accounting
/// used by [`memory_model`].
pub type NodeId = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("format error: {0}")]
    Format(String),
    #[error("node id {id} out of bounds for {n} nodes")]
    Bounds { id: i64, n: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Whether the staged edges came from a directed source or were expanded
/// from an undirected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Directedness {
    Directed,
    /// Undirected input stored as both (u,v) and (v,u).
    UndirectedAsSymmetric,
}

/// Staging format between the loaders and CSR/CSC construction.
///
/// Construction normalizes the edge set: edges are sorted, duplicates are
/// dropped, and self-loops are removed (they cannot shorten any path and
/// would distort the inspection counters).
#[derive(Debug, Clone)]
pub struct EdgeList {
    num_nodes: usize,
    edges: Vec<(NodeId, NodeId)>,
    directedness: Directedness,
}

impl EdgeList {
    /// Builds a normalized edge list. Fails if any endpoint is out of range.
    pub fn new(
        num_nodes: usize,
        mut edges: Vec<(NodeId, NodeId)>,
        directedness: Directedness,
    ) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for id in [u, v] {
                if id as usize >= num_nodes {
                    return Err(GraphError::Bounds {
                        id: id as i64,
                        n: num_nodes,
                    });
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges.retain(|&(u, v)| u != v);
        Ok(Self {
            num_nodes,
            edges,
            directedness,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    /// Distinct directed edges after normalization.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn directedness(&self) -> Directedness {
        self.directedness
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_dedups_and_drops_self_loops() {
        let el = EdgeList::new(
            3,
            vec![(0, 1), (1, 1), (0, 1), (2, 0)],
            Directedness::Directed,
        )
        .unwrap();
        assert_eq!(el.edges(), &[(0, 1), (2, 0)]);
        assert_eq!(el.num_edges(), 2);
    }

    #[test]
    fn out_of_range_endpoint_is_rejected() {
        let err = EdgeList::new(2, vec![(0, 2)], Directedness::Directed).unwrap_err();
        assert!(matches!(err, GraphError::Bounds { id: 2, n: 2 }));
    }
}
