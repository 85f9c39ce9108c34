//! Walk counting by integer matrix powers.
//!
//! Entry (i,j) of the k-th power of the adjacency matrix counts the walks of
//! length k from i to j; the smallest k with a non-zero count is the
//! shortest-path distance. Counts grow exponentially, so they saturate at
//! `u64::MAX` with an explicit flag instead of wrapping — saturation keeps
//! positivity intact (a saturated entry is still non-zero), which is all the
//! first-hit search needs, while exact-count comparisons must consult the
//! flag and abort rather than trust a saturated value.

use thiserror::Error;

use crate::graph::{CsrGraph, NodeId};

/// Hard cap on the dense matrix dimension.
pub const MAX_DENSE_NODES: usize = 32;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("dense count matrix supports at most {MAX_DENSE_NODES} nodes, got {0}")]
    TooManyNodes(usize),
    #[error("power k must satisfy 1 <= k <= n, got {0}")]
    InvalidPower(usize),
    #[error("first-hit distance is undefined for i = j")]
    DiagonalPair,
    #[error("node {0} out of range")]
    NodeOutOfRange(NodeId),
}

/// Dense n×n walk-count matrix with saturating 64-bit entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseCountMatrix {
    n: usize,
    counts: Vec<u64>,
    overflowed: bool,
}

impl DenseCountMatrix {
    /// Adjacency indicator matrix of `csr` (the first power).
    pub fn adjacency(csr: &CsrGraph) -> Result<Self, OracleError> {
        let n = csr.node_count();
        if n > MAX_DENSE_NODES {
            return Err(OracleError::TooManyNodes(n));
        }
        let mut counts = vec![0u64; n * n];
        for (u, v) in csr.edge_iter() {
            counts[u as usize * n + v as usize] = 1;
        }
        Ok(Self {
            n,
            counts,
            overflowed: false,
        })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self, OracleError> {
        let n = rows.len();
        if n > MAX_DENSE_NODES {
            return Err(OracleError::TooManyNodes(n));
        }
        let mut counts = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "count matrix must be square");
            counts.extend_from_slice(row);
        }
        Ok(Self {
            n,
            counts,
            overflowed: false,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.n + j]
    }

    /// True if any entry saturated during multiplication; exact-count
    /// comparisons are invalid once set.
    pub fn overflowed(&self) -> bool {
        self.overflowed
    }

    fn multiply(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        let mut overflowed = self.overflowed || rhs.overflowed;
        for i in 0..n {
            for l in 0..n {
                let a = self.counts[i * n + l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.counts[l * n + j];
                    if b == 0 {
                        continue;
                    }
                    let prod = a.checked_mul(b).unwrap_or_else(|| {
                        overflowed = true;
                        u64::MAX
                    });
                    out[i * n + j] = out[i * n + j].checked_add(prod).unwrap_or_else(|| {
                        overflowed = true;
                        u64::MAX
                    });
                }
            }
        }
        Self {
            n,
            counts: out,
            overflowed,
        }
    }
}

/// k-th power of `adjacency` by repeated multiplication. Requires
/// 1 ≤ k ≤ n.
pub fn path_count_power(adjacency: &DenseCountMatrix, k: usize) -> Result<DenseCountMatrix, OracleError> {
    if k == 0 || k > adjacency.n {
        return Err(OracleError::InvalidPower(k));
    }
    let mut acc = adjacency.clone();
    for _ in 1..k {
        acc = acc.multiply(adjacency);
    }
    Ok(acc)
}

/// Smallest k in [1, n−1] with a positive walk count from i to j, or `None`
/// when no such power exists (j unreachable from i). `None` rather than 0
/// keeps the result distinct from the distance sentinel. i = j is rejected:
/// the characterization only covers distinct endpoints.
pub fn first_hit_distance(
    adjacency: &DenseCountMatrix,
    i: NodeId,
    j: NodeId,
) -> Result<Option<u32>, OracleError> {
    if i == j {
        return Err(OracleError::DiagonalPair);
    }
    let n = adjacency.n;
    for id in [i, j] {
        if id as usize >= n {
            return Err(OracleError::NodeOutOfRange(id));
        }
    }
    let mut acc = adjacency.clone();
    for k in 1..n {
        if acc.get(i as usize, j as usize) > 0 {
            return Ok(Some(k as u32));
        }
        acc = acc.multiply(adjacency);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen;

    #[test]
    fn cycle_cubed_is_identity_patterned() {
        let a = DenseCountMatrix::adjacency(&gen::cycle(3)).unwrap();
        let p3 = path_count_power(&a, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p3.get(i, j), u64::from(i == j));
            }
        }
    }

    #[test]
    fn undirected_triangle_squared_has_diagonal_two() {
        let a = DenseCountMatrix::from_rows(&[
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ])
        .unwrap();
        let p2 = path_count_power(&a, 2).unwrap();
        for i in 0..3 {
            assert_eq!(p2.get(i, i), 2);
        }
    }

    /// Independent oracle: enumerate every length-3 walk by 3-deep nesting.
    #[test]
    fn random_digraph_counts_match_walk_enumeration() {
        let g = gen::er_digraph(8, 0.35, 42);
        let a = DenseCountMatrix::adjacency(&g).unwrap();
        let p3 = path_count_power(&a, 3).unwrap();
        assert!(!p3.overflowed());

        let adj = |u: usize, v: usize| a.get(u, v) == 1;
        for i in 0..8 {
            for j in 0..8 {
                let mut walks = 0u64;
                for x in 0..8 {
                    for y in 0..8 {
                        if adj(i, x) && adj(x, y) && adj(y, j) {
                            walks += 1;
                        }
                    }
                }
                assert_eq!(p3.get(i, j), walks, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn power_domain_errors() {
        let a = DenseCountMatrix::adjacency(&gen::path(3)).unwrap();
        assert!(matches!(
            path_count_power(&a, 0),
            Err(OracleError::InvalidPower(0))
        ));
        assert!(matches!(
            path_count_power(&a, 4),
            Err(OracleError::InvalidPower(4))
        ));
        assert!(DenseCountMatrix::adjacency(&gen::path(33)).is_err());
    }

    #[test]
    fn first_hit_on_path_and_disjoint_edges() {
        let a = DenseCountMatrix::adjacency(&gen::path(3)).unwrap();
        assert_eq!(first_hit_distance(&a, 0, 2).unwrap(), Some(2));

        let two_edges = gen::disjoint_union(&gen::path(2), &gen::path(2));
        let a2 = DenseCountMatrix::adjacency(&two_edges).unwrap();
        assert_eq!(first_hit_distance(&a2, 0, 3).unwrap(), None);

        assert!(matches!(
            first_hit_distance(&a, 1, 1),
            Err(OracleError::DiagonalPair)
        ));
    }

    #[test]
    fn first_hit_matches_bfs_for_all_pairs() {
        let g = gen::er_digraph(10, 0.2, 3);
        let a = DenseCountMatrix::adjacency(&g).unwrap();
        for i in 0..10u32 {
            let trace = super::super::bfs_baseline(&g, i).unwrap();
            for j in 0..10u32 {
                if i == j {
                    continue;
                }
                let hit = first_hit_distance(&a, i, j).unwrap();
                let bfs = trace.distance[j as usize];
                match hit {
                    Some(k) => assert_eq!(k, bfs, "pair ({i},{j})"),
                    None => assert_eq!(bfs, 0, "pair ({i},{j}) should be unreached"),
                }
            }
        }
    }

    #[test]
    fn saturation_sets_flag_and_keeps_positivity() {
        let g = gen::complete(20);
        let a = DenseCountMatrix::adjacency(&g).unwrap();
        let p = path_count_power(&a, 20).unwrap();
        assert!(p.overflowed());
        assert!(p.get(0, 1) > 0);
    }
}
