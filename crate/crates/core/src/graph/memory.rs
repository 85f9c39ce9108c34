//! Minimum-footprint model for the engine versus a queue BFS.
//!
//! The engine needs the adjacency array (4 bytes per directed edge), a
//! byte-wide distance mask and two boolean frontier arrays: 4m + 3n bytes.
//! A queue BFS needs the adjacency array, a 4-byte distance value per node
//! and a worst-case n-entry queue: 4m + 8n bytes.

/// Byte figures for a graph with `n` nodes and `m` directed edges, and the
/// ratio `eta` between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemoryModel {
    pub n: u64,
    pub m: u64,
    /// 4m + 3n.
    pub engine_bytes: u64,
    /// 4m + 8n.
    pub bfs_bytes: u64,
    /// (4m+3n)/(4m+8n) = (4D+3)/(4D+8) for average degree D = m/n.
    /// Bounded by 3/8 ≤ eta < 1 and strictly increasing in D.
    pub eta: f64,
}

/// Evaluates the model. `n` must be at least 1.
pub fn memory_model(n: u64, m: u64) -> MemoryModel {
    assert!(n >= 1, "memory model requires at least one node");
    let engine_bytes = 4 * m + 3 * n;
    let bfs_bytes = 4 * m + 8 * n;
    MemoryModel {
        n,
        m,
        engine_bytes,
        bfs_bytes,
        eta: engine_bytes as f64 / bfs_bytes as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_degree_ratio() {
        // D = 1: (4+3)/(4+8) = 7/12.
        let m = memory_model(1, 1);
        assert_eq!(m.engine_bytes, 7);
        assert_eq!(m.bfs_bytes, 12);
        assert_eq!(m.eta, 7.0 / 12.0);
    }

    #[test]
    fn degenerate_edgeless_ratio() {
        let m = memory_model(10, 0);
        assert_eq!(m.eta, 3.0 / 8.0);
    }

    #[test]
    fn matches_direct_arithmetic_at_full_precision() {
        // Independent route: compute the quotient from scratch.
        let (n, m) = (1_000u64, 1_000_000u64);
        let model = memory_model(n, m);
        let direct = (4.0 * m as f64 + 3.0 * n as f64) / (4.0 * m as f64 + 8.0 * n as f64);
        assert_eq!(model.eta, direct);
        assert_eq!(model.engine_bytes, 4_003_000);
        assert_eq!(model.bfs_bytes, 4_008_000);
    }

    #[test]
    fn eta_bounds_and_monotonicity() {
        let mut last = 0.0f64;
        for d in [0u64, 1, 2, 3, 5, 10, 100, 10_000, 1_000_000] {
            let model = memory_model(1_000, 1_000 * d);
            assert!(model.eta >= 3.0 / 8.0 && model.eta < 1.0);
            assert!(model.eta > last || d == 0);
            last = model.eta;
        }
    }
}
