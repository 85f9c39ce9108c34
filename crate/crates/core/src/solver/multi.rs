//! Multi-source drivers: sources are independent, so parallelism runs
//! across them. Results are collected positionally and are therefore
//! deterministic for any thread count and schedule.

use rayon::prelude::*;

use crate::graph::{CsrGraph, NodeId};

use super::{sssp_sovm, SolverError, SsspResult};

/// Default cap for [`apsp_dense`]'s n×n output (64 MiB of u32 distances).
pub const DEFAULT_DENSE_LIMIT: usize = 4096;

pub(crate) fn build_pool(threads: usize) -> Result<rayon::ThreadPool, SolverError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| SolverError::Pool(e.to_string()))
}

/// Runs SOVM from every source on a freshly built pool of `threads` workers.
/// All sources are bounds-checked before any solving starts; the output
/// order matches the input order.
pub fn msssp(
    csr: &CsrGraph,
    sources: &[NodeId],
    threads: usize,
) -> Result<Vec<SsspResult>, SolverError> {
    let pool = build_pool(threads)?;
    msssp_with_pool(csr, sources, &pool)
}

/// Like [`msssp`] but reuses a caller-owned pool, so repeated batches (the
/// benchmark harness) do not pay pool setup inside the timed region.
pub fn msssp_with_pool(
    csr: &CsrGraph,
    sources: &[NodeId],
    pool: &rayon::ThreadPool,
) -> Result<Vec<SsspResult>, SolverError> {
    let n = csr.node_count();
    for &s in sources {
        if s as usize >= n {
            return Err(SolverError::SourceOutOfRange { source_node: s, n });
        }
    }
    Ok(pool.install(|| {
        sources
            .par_iter()
            .map(|&s| sssp_sovm(csr, s).expect("sources were bounds-checked"))
            .collect()
    }))
}

/// Full distance matrix, row i = SOVM distances from source i. Refuses to
/// materialize more than `limit` rows; stream with [`apsp_stream`] instead
/// for anything bigger.
pub fn apsp_dense(
    csr: &CsrGraph,
    threads: usize,
    limit: usize,
) -> Result<Vec<Vec<u32>>, SolverError> {
    let n = csr.node_count();
    if n > limit {
        return Err(SolverError::DenseLimitExceeded { n, limit });
    }
    let sources: Vec<NodeId> = (0..n as NodeId).collect();
    Ok(msssp(csr, &sources, threads)?
        .into_iter()
        .map(|r| r.distance)
        .collect())
}

/// All-pairs results delivered to `sink` in source order. Rows are computed
/// in parallel a chunk at a time, so memory stays bounded by the chunk size
/// rather than n².
pub fn apsp_stream<F>(csr: &CsrGraph, threads: usize, mut sink: F) -> Result<(), SolverError>
where
    F: FnMut(&SsspResult),
{
    const CHUNK: usize = 512;
    let n = csr.node_count();
    let pool = build_pool(threads)?;
    let mut start = 0usize;
    while start < n {
        let end = (start + CHUNK).min(n);
        let sources: Vec<NodeId> = (start as NodeId..end as NodeId).collect();
        let results = msssp_with_pool(csr, &sources, &pool)?;
        for r in &results {
            sink(r);
        }
        start = end;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen;
    use crate::oracle::bfs_baseline;

    #[test]
    fn single_source_equals_direct_call() {
        let g = gen::er_digraph(32, 0.1, 2);
        let batch = msssp(&g, &[5], 4).unwrap();
        assert_eq!(batch.len(), 1);
        assert_eq!(batch[0], sssp_sovm(&g, 5).unwrap());
    }

    #[test]
    fn repeated_sources_give_identical_results() {
        let g = gen::er_digraph(32, 0.1, 2);
        let batch = msssp(&g, &[7, 7], 2).unwrap();
        assert_eq!(batch[0], batch[1]);
    }

    #[test]
    fn out_of_range_source_fails_before_any_work() {
        let g = gen::path(4);
        assert!(matches!(
            msssp(&g, &[0, 9], 2),
            Err(SolverError::SourceOutOfRange { source_node: 9, n: 4 })
        ));
    }

    #[test]
    fn distances_identical_across_thread_counts() {
        let g = gen::er_digraph(128, 0.05, 77);
        let sources: Vec<NodeId> = (0..64u32).collect();
        let reference = msssp(&g, &sources, 1).unwrap();
        for threads in [2, 8] {
            let run = msssp(&g, &sources, threads).unwrap();
            assert_eq!(reference, run, "threads {threads}");
        }
    }

    #[test]
    fn dense_matrix_of_three_cycle() {
        let g = gen::cycle(3);
        let m = apsp_dense(&g, 1, DEFAULT_DENSE_LIMIT).unwrap();
        assert_eq!(m, vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]);
    }

    #[test]
    fn dense_matrix_of_edgeless_graph_is_all_sentinel() {
        let g = gen::disjoint_union(&gen::path(1), &gen::disjoint_union(&gen::path(1), &gen::path(1)));
        let m = apsp_dense(&g, 1, DEFAULT_DENSE_LIMIT).unwrap();
        assert_eq!(m, vec![vec![0, 0, 0]; 3]);
    }

    #[test]
    fn dense_limit_is_enforced() {
        let g = gen::path(8);
        assert!(matches!(
            apsp_dense(&g, 1, 4),
            Err(SolverError::DenseLimitExceeded { n: 8, limit: 4 })
        ));
    }

    #[test]
    fn dense_rows_match_oracle_sweep() {
        let g = gen::er_digraph(64, 0.07, 31);
        let m = apsp_dense(&g, 4, DEFAULT_DENSE_LIMIT).unwrap();
        for source in 0..64u32 {
            let oracle = bfs_baseline(&g, source).unwrap();
            assert_eq!(m[source as usize], oracle.distance, "row {source}");
        }
    }

    #[test]
    fn stream_visits_rows_in_order() {
        let g = gen::er_digraph(40, 0.1, 4);
        let mut seen = Vec::new();
        apsp_stream(&g, 2, |r| seen.push(r.source)).unwrap();
        assert_eq!(seen, (0..40u32).collect::<Vec<_>>());
    }
}
