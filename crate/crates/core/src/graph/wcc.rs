//! Weakly connected components and the per-component size statistics that
//! bound the solver's edge-inspection counts.

use super::{transpose, CsrGraph, NodeId};

/// Component labeling plus per-component node/edge counts.
///
/// A component's edge count is the number of directed edges with both
/// endpoints inside it (every directed edge qualifies, since weak
/// connectivity is closed over edge endpoints). An isolated node forms a
/// component of 1 node and 0 edges.
#[derive(Debug, Clone)]
pub struct WccSummary {
    component_id: Vec<u32>,
    /// Indexed by component label: (node count, directed edge count).
    component_sizes: Vec<(u64, u64)>,
    s_wcc: u64,
    e_wcc: u64,
}

impl WccSummary {
    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn component_id(&self, node: NodeId) -> u32 {
        self.component_id[node as usize]
    }

    pub fn component_ids(&self) -> &[u32] {
        &self.component_id
    }

    pub fn component_sizes(&self) -> &[(u64, u64)] {
        &self.component_sizes
    }

    /// Maximum node count over all components.
    pub fn s_wcc(&self) -> u64 {
        self.s_wcc
    }

    /// Maximum directed-edge count over all components.
    pub fn e_wcc(&self) -> u64 {
        self.e_wcc
    }

    /// Node count of `node`'s component.
    pub fn s_wcc_of(&self, node: NodeId) -> u64 {
        self.component_sizes[self.component_id[node as usize] as usize].0
    }

    /// Directed-edge count of `node`'s component.
    pub fn e_wcc_of(&self, node: NodeId) -> u64 {
        self.component_sizes[self.component_id[node as usize] as usize].1
    }
}

/// Labels the components of the underlying undirected graph.
///
/// Traversal-based (frontier sweep over out- plus in-neighbors); the test
/// suite checks it against an independent union-find.
pub fn weakly_connected_components(csr: &CsrGraph) -> WccSummary {
    let n = csr.node_count();
    let csc = transpose(csr);
    let mut component_id = vec![u32::MAX; n];
    let mut component_sizes: Vec<(u64, u64)> = Vec::new();
    let mut stack = Vec::new();

    for start in 0..n {
        if component_id[start] != u32::MAX {
            continue;
        }
        let label = component_sizes.len() as u32;
        let mut nodes = 0u64;
        component_id[start] = label;
        stack.push(start as NodeId);
        while let Some(u) = stack.pop() {
            nodes += 1;
            for &v in csr.neighbors(u).iter().chain(csc.in_neighbors(u)) {
                if component_id[v as usize] == u32::MAX {
                    component_id[v as usize] = label;
                    stack.push(v);
                }
            }
        }
        component_sizes.push((nodes, 0));
    }

    // Every directed edge lands in its source's component.
    for u in 0..n {
        component_sizes[component_id[u] as usize].1 += csr.out_degree(u as NodeId) as u64;
    }

    let s_wcc = component_sizes.iter().map(|s| s.0).max().unwrap_or(0);
    let e_wcc = component_sizes.iter().map(|s| s.1).max().unwrap_or(0);

    WccSummary {
        component_id,
        component_sizes,
        s_wcc,
        e_wcc,
    }
}
