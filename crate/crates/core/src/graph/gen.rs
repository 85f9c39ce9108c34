//! Deterministic synthetic graphs for test corpora and benchmark smoke runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CsrGraph, Directedness, EdgeList, NodeId};

/// Erdős–Rényi digraph: each ordered pair (u,v), u ≠ v, becomes an edge
/// independently with probability `p`. Deterministic for a fixed seed.
pub fn er_digraph(n: usize, p: f64, seed: u64) -> CsrGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as NodeId {
        for v in 0..n as NodeId {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    from_edges(n, edges)
}

/// Directed path 0 → 1 → … → n−1.
pub fn path(n: usize) -> CsrGraph {
    from_edges(n, (1..n as NodeId).map(|v| (v - 1, v)).collect())
}

/// Directed cycle 0 → 1 → … → n−1 → 0.
pub fn cycle(n: usize) -> CsrGraph {
    let mut edges: Vec<_> = (1..n as NodeId).map(|v| (v - 1, v)).collect();
    if n > 1 {
        edges.push((n as NodeId - 1, 0));
    }
    from_edges(n, edges)
}

/// Star with out-edges from center 0 to each of the `leaves`.
pub fn star(leaves: usize) -> CsrGraph {
    from_edges(leaves + 1, (1..=leaves as NodeId).map(|v| (0, v)).collect())
}

/// Complete digraph on n nodes (all ordered pairs, no self-loops).
pub fn complete(n: usize) -> CsrGraph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1));
    for u in 0..n as NodeId {
        for v in 0..n as NodeId {
            if u != v {
                edges.push((u, v));
            }
        }
    }
    from_edges(n, edges)
}

/// Disjoint union: nodes of `b` are shifted past the nodes of `a`.
pub fn disjoint_union(a: &CsrGraph, b: &CsrGraph) -> CsrGraph {
    let shift = a.node_count() as NodeId;
    let mut edges: Vec<_> = a.edge_iter().collect();
    edges.extend(b.edge_iter().map(|(u, v)| (u + shift, v + shift)));
    from_edges(a.node_count() + b.node_count(), edges)
}

/// Symmetric w×h grid with a sprinkle of random symmetric shortcut edges;
/// a road-network-like shape with a large diameter. Used by the benchmark
/// smoke test, which needs a mid-size graph without fetching one.
pub fn grid_with_shortcuts(width: usize, height: usize, shortcuts: usize, seed: u64) -> CsrGraph {
    let n = width * height;
    let id = |x: usize, y: usize| (y * width + x) as NodeId;
    let mut edges = Vec::with_capacity(4 * n + 2 * shortcuts);
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                edges.push((id(x, y), id(x + 1, y)));
                edges.push((id(x + 1, y), id(x, y)));
            }
            if y + 1 < height {
                edges.push((id(x, y), id(x, y + 1)));
                edges.push((id(x, y + 1), id(x, y)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..shortcuts {
        let u = rng.gen_range(0..n) as NodeId;
        let v = rng.gen_range(0..n) as NodeId;
        if u != v {
            edges.push((u, v));
            edges.push((v, u));
        }
    }
    from_edges(n, edges)
}

fn from_edges(n: usize, edges: Vec<(NodeId, NodeId)>) -> CsrGraph {
    CsrGraph::from_edge_list(
        &EdgeList::new(n, edges, Directedness::Directed).expect("generated ids are in range"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shapes() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(4).edge_count(), 4);
        assert_eq!(star(5).edge_count(), 5);
        assert_eq!(complete(4).edge_count(), 12);
        let u = disjoint_union(&path(3), &cycle(3));
        assert_eq!(u.node_count(), 6);
        assert_eq!(u.edge_count(), 5);
    }

    #[test]
    fn er_is_deterministic_per_seed() {
        let a = er_digraph(32, 0.1, 7);
        let b = er_digraph(32, 0.1, 7);
        let c = er_digraph(32, 0.1, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
