//! Compressed sparse row / column adjacency and the transpose between them.

use super::{EdgeList, GraphError, NodeId};

/// Row-compressed out-adjacency. Immutable after construction; rows are
/// sorted ascending with no duplicates and no self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    n: usize,
    row_ptr: Vec<usize>,
    col: Vec<NodeId>,
}

/// Column-compressed in-adjacency: the exact structural transpose of the
/// companion [`CsrGraph`]. Edge (u,v) sits in CSR row u iff it sits in CSC
/// column v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CscGraph {
    n: usize,
    col_ptr: Vec<usize>,
    row: Vec<NodeId>,
}

impl CsrGraph {
    /// Counting-sort construction from a normalized edge list.
    pub fn from_edge_list(el: &EdgeList) -> Self {
        let n = el.num_nodes();
        let mut row_ptr = vec![0usize; n + 1];
        for &(u, _) in el.edges() {
            row_ptr[u as usize + 1] += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        // EdgeList is sorted by (src, dst), so a single in-order pass leaves
        // every row sorted.
        let col = el.edges().iter().map(|&(_, v)| v).collect();
        Self { n, row_ptr, col }
    }

    /// Rebuilds a CSR from raw arrays, validating every structural invariant.
    /// Used by the binary cache loader.
    pub fn from_parts(row_ptr: Vec<usize>, col: Vec<NodeId>) -> Result<Self, GraphError> {
        if row_ptr.is_empty() {
            return Err(GraphError::Format("row_ptr must have length n+1".into()));
        }
        let n = row_ptr.len() - 1;
        if row_ptr[0] != 0 || row_ptr[n] != col.len() {
            return Err(GraphError::Format(
                "row_ptr endpoints do not match edge array".into(),
            ));
        }
        if row_ptr.windows(2).any(|w| w[0] > w[1]) {
            return Err(GraphError::Format("row_ptr must be monotone".into()));
        }
        for u in 0..n {
            let row = &col[row_ptr[u]..row_ptr[u + 1]];
            for (k, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(GraphError::Bounds { id: v as i64, n });
                }
                if v as usize == u {
                    return Err(GraphError::Format(format!("self-loop at node {u}")));
                }
                if k > 0 && row[k - 1] >= v {
                    return Err(GraphError::Format(format!(
                        "row {u} not strictly sorted"
                    )));
                }
            }
        }
        Ok(Self { n, row_ptr, col })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Directed edge count.
    pub fn edge_count(&self) -> usize {
        self.col.len()
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn col(&self) -> &[NodeId] {
        &self.col
    }

    /// Out-neighbors of `u`, sorted ascending.
    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        let (s, e) = (self.row_ptr[u as usize], self.row_ptr[u as usize + 1]);
        &self.col[s..e]
    }

    pub fn out_degree(&self, u: NodeId) -> usize {
        self.row_ptr[u as usize + 1] - self.row_ptr[u as usize]
    }

    pub fn edge_iter(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n as NodeId).flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v)))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList::new(
            self.n,
            self.edge_iter().collect(),
            super::Directedness::Directed,
        )
        .expect("CSR edges are in range by construction")
    }

    /// Maximum finite BFS distance from `source` over reachable nodes;
    /// 0 if `source` reaches nothing.
    ///
    /// Level-synchronous frontier sweep, independent of the queue-BFS
    /// reference implementation it is tested against.
    pub fn eccentricity(&self, source: NodeId) -> Result<u32, GraphError> {
        if source as usize >= self.n {
            return Err(GraphError::Bounds {
                id: source as i64,
                n: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        seen[source as usize] = true;
        let mut frontier = vec![source];
        let mut next = Vec::new();
        let mut depth = 0u32;
        while !frontier.is_empty() {
            for &u in &frontier {
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            depth += 1;
            frontier.clear();
            std::mem::swap(&mut frontier, &mut next);
        }
        Ok(depth)
    }
}

impl CscGraph {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.row.len()
    }

    pub fn col_ptr(&self) -> &[usize] {
        &self.col_ptr
    }

    pub fn row(&self) -> &[NodeId] {
        &self.row
    }

    /// In-neighbors of `v`, sorted ascending.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        let (s, e) = (self.col_ptr[v as usize], self.col_ptr[v as usize + 1]);
        &self.row[s..e]
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.col_ptr[v as usize + 1] - self.col_ptr[v as usize]
    }

    /// Transposes back to CSR. `csc.to_csr()` of `transpose(g)` reproduces `g`.
    pub fn to_csr(&self) -> CsrGraph {
        let (ptr, idx) = transpose_arrays(self.n, &self.col_ptr, &self.row);
        CsrGraph {
            n: self.n,
            row_ptr: ptr,
            col: idx,
        }
    }
}

/// Builds the column-compressed transpose of `csr`.
pub fn transpose(csr: &CsrGraph) -> CscGraph {
    let (ptr, idx) = transpose_arrays(csr.n, &csr.row_ptr, &csr.col);
    CscGraph {
        n: csr.n,
        col_ptr: ptr,
        row: idx,
    }
}

/// Shared counting-sort kernel: offsets/indices of A become offsets/indices
/// of Aᵀ. Scanning sources in ascending order leaves every output list sorted.
fn transpose_arrays(n: usize, ptr: &[usize], idx: &[NodeId]) -> (Vec<usize>, Vec<NodeId>) {
    let m = idx.len();
    let mut out_ptr = vec![0usize; n + 1];
    for &t in idx {
        out_ptr[t as usize + 1] += 1;
    }
    for i in 0..n {
        out_ptr[i + 1] += out_ptr[i];
    }
    let mut cursor = out_ptr.clone();
    let mut out_idx = vec![0 as NodeId; m];
    for u in 0..n {
        for &t in &idx[ptr[u]..ptr[u + 1]] {
            out_idx[cursor[t as usize]] = u as NodeId;
            cursor[t as usize] += 1;
        }
    }
    (out_ptr, out_idx)
}

#[cfg(test)]
mod tests {
    use super::super::{Directedness, EdgeList};
    use super::*;
    use std::collections::BTreeSet;

    fn csr_of(n: usize, edges: &[(NodeId, NodeId)]) -> CsrGraph {
        CsrGraph::from_edge_list(
            &EdgeList::new(n, edges.to_vec(), Directedness::Directed).unwrap(),
        )
    }

    #[test]
    fn hand_built_csr() {
        let g = csr_of(3, &[(0, 1), (0, 2), (2, 1)]);
        assert_eq!(g.row_ptr(), &[0, 2, 2, 3]);
        assert_eq!(g.col(), &[1, 2, 1]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn empty_edge_set() {
        let g = csr_of(2, &[]);
        assert_eq!(g.row_ptr(), &[0, 0, 0]);
        assert!(g.col().is_empty());
    }

    #[test]
    fn csr_round_trips_random_edge_set() {
        // Independent oracle: compare edge sets by exhaustive enumeration.
        let mut edges = Vec::new();
        let mut state = 0x243f6a88u64;
        for u in 0..4u32 {
            for v in 0..4u32 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if u != v && state >> 62 == 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = csr_of(4, &edges);
        let expected: BTreeSet<_> = edges.iter().copied().collect();
        let actual: BTreeSet<_> = g.edge_iter().collect();
        assert_eq!(expected, actual);
    }

    #[test]
    fn transpose_single_edge() {
        let g = csr_of(2, &[(0, 1)]);
        let t = transpose(&g);
        assert_eq!(t.in_neighbors(1), &[0]);
        assert!(t.in_neighbors(0).is_empty());
    }

    #[test]
    fn transpose_of_symmetric_graph_equals_original_arrays() {
        let g = csr_of(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]);
        let t = transpose(&g);
        assert_eq!(g.row_ptr(), t.col_ptr());
        assert_eq!(g.col(), t.row());
    }

    #[test]
    fn double_transpose_is_identity() {
        let mut edges = Vec::new();
        let mut state = 0x13198a2eu64;
        for u in 0..64u32 {
            for v in 0..64u32 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if u != v && state >> 60 == 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = csr_of(64, &edges);
        assert_eq!(transpose(&g).to_csr(), g);
    }

    #[test]
    fn rebuild_from_own_edge_list_is_identical() {
        let g = csr_of(5, &[(0, 3), (1, 2), (3, 0), (4, 1), (4, 2)]);
        let rebuilt = CsrGraph::from_edge_list(&g.to_edge_list());
        assert_eq!(g, rebuilt);
    }

    #[test]
    fn eccentricity_examples() {
        let path = csr_of(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.eccentricity(0).unwrap(), 3);
        assert_eq!(path.eccentricity(3).unwrap(), 0);

        let star = csr_of(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(star.eccentricity(0).unwrap(), 1);

        assert!(path.eccentricity(9).is_err());
    }

    #[test]
    fn from_parts_rejects_broken_invariants() {
        assert!(CsrGraph::from_parts(vec![0, 2, 1], vec![1, 0]).is_err());
        assert!(CsrGraph::from_parts(vec![0, 1], vec![5]).is_err());
        assert!(CsrGraph::from_parts(vec![0, 1], vec![0]).is_err()); // self-loop
        assert!(CsrGraph::from_parts(vec![0, 2, 2], vec![1, 1]).is_err()); // duplicate within row
    }
}
