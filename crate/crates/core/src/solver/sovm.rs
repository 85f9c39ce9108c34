//! Push-style solver over the out-adjacency.

use crate::graph::{CsrGraph, NodeId};

use super::{FrontierState, SolverError, SsspResult};

/// Sparse-optimized boolean vector-matrix SSSP.
///
/// Each round replaces a vector-matrix multiplication with one adjacency-row
/// merge per frontier node: every out-edge of the frontier is scanned, and a
/// target is settled at the current step exactly when its distance is still
/// the sentinel and it is not the source. The sentinel test is a per-edge
/// filter, not a scan break — breaking would lose frontier targets sitting
/// after a settled neighbor in the row. The run converges when a round
/// settles nothing.
pub fn sssp_sovm(csr: &CsrGraph, source: NodeId) -> Result<SsspResult, SolverError> {
    let n = csr.node_count();
    if source as usize >= n {
        return Err(SolverError::SourceOutOfRange { source_node: source, n });
    }
    let mut result = SsspResult::new(source, n);
    let mut state = FrontierState::new(n);
    state.seed(source);

    while state.step < n as u32 {
        state.step += 1;
        state.is_converged = true;
        #[cfg(debug_assertions)]
        check_frontier_is_previous_layer(&state, &result);
        for idx in 0..state.frontier_len() {
            let u = state.frontier_node(idx);
            result.node_inspections += 1;
            let row = csr.neighbors(u);
            result.edge_inspections += row.len() as u64;
            for &t in row {
                if result.distance[t as usize] == 0 && t != source {
                    result.settle(t, state.step);
                    state.record(t);
                    state.is_converged = false;
                }
            }
        }
        if state.is_converged {
            break;
        }
        result.iterations += 1;
        state.swap_frontiers();
    }
    Ok(result)
}

/// Every frontier node must carry the distance settled exactly one round
/// ago (the source plays that role in round one); anything else means a
/// node re-entered the frontier.
#[cfg(debug_assertions)]
fn check_frontier_is_previous_layer(state: &FrontierState, result: &SsspResult) {
    for idx in 0..state.frontier_len() {
        let u = state.frontier_node(idx);
        if u == result.source {
            debug_assert_eq!(state.step, 1, "source must only seed round one");
        } else {
            debug_assert_eq!(
                result.distance[u as usize],
                state.step - 1,
                "frontier node {u} is not from the previous layer"
            );
        }
    }
}
