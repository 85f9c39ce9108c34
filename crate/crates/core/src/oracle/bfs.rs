//! FIFO-queue BFS baseline.

use std::collections::VecDeque;

use crate::graph::{CsrGraph, GraphError, NodeId};

/// Distances plus visitation counters from one baseline BFS run.
///
/// Distance uses the same convention as the solver results: 0 is the
/// unreached sentinel and the source reports 0.
#[derive(Debug, Clone)]
pub struct BfsTrace {
    pub distance: Vec<u32>,
    /// Nodes popped from the queue (the source counts).
    pub nodes_visited: u64,
    /// Adjacency entries inspected; every out-edge of every reached node is
    /// looked at exactly once, so this equals Σ out-degree over the
    /// reachable set.
    pub edges_visited: u64,
    /// Inspections whose target was already settled (or was the source) —
    /// the per-edge occupancy checks a queue BFS cannot avoid.
    pub settled_target_checks: u64,
}

/// Textbook BFS from `source` over the out-adjacency.
pub fn bfs_baseline(csr: &CsrGraph, source: NodeId) -> Result<BfsTrace, GraphError> {
    let n = csr.node_count();
    if source as usize >= n {
        return Err(GraphError::Bounds {
            id: source as i64,
            n,
        });
    }
    let mut distance = vec![0u32; n];
    let mut settled = vec![false; n];
    settled[source as usize] = true;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    let mut trace = BfsTrace {
        distance: Vec::new(),
        nodes_visited: 0,
        edges_visited: 0,
        settled_target_checks: 0,
    };
    while let Some(u) = queue.pop_front() {
        trace.nodes_visited += 1;
        let next = distance[u as usize] + 1;
        for &v in csr.neighbors(u) {
            trace.edges_visited += 1;
            if settled[v as usize] {
                trace.settled_target_checks += 1;
            } else {
                settled[v as usize] = true;
                distance[v as usize] = next;
                queue.push_back(v);
            }
        }
    }
    trace.distance = distance;
    Ok(trace)
}
