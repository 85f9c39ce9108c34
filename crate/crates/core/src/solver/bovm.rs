//! Pull-style solver over the in-adjacency.

use crate::graph::{CscGraph, NodeId};

use super::{FrontierState, SolverError, SsspResult};

/// Boolean vector-matrix SSSP.
///
/// Each round scans every still-unreached node's CSC column for an
/// in-neighbor already in the reached set, stopping the column scan at the
/// first hit — the compressed-index sum only needs one non-zero term.
/// Discoveries are merged into the reached set once per round, after the
/// per-node sweep; merging mid-round would let same-step nodes seed further
/// same-step discoveries and break the layering. The source is seeded into
/// the reached set up front, which is what keeps cycles from ever settling
/// it. Self-probes cannot occur because self-loops are removed at ingestion.
pub fn sssp_bovm(csc: &CscGraph, source: NodeId) -> Result<SsspResult, SolverError> {
    let n = csc.node_count();
    if source as usize >= n {
        return Err(SolverError::SourceOutOfRange { source_node: source, n });
    }
    let mut result = SsspResult::new(source, n);
    let mut state = FrontierState::new(n);
    state.seed(source);

    while state.step < n as u32 {
        state.step += 1;
        state.is_converged = true;
        for i in 0..n as NodeId {
            if state.in_alpha(i) {
                continue;
            }
            result.node_inspections += 1;
            for &p in csc.in_neighbors(i) {
                result.edge_inspections += 1;
                if state.in_alpha(p) {
                    result.settle(i, state.step);
                    state.record(i);
                    state.is_converged = false;
                    break;
                }
            }
        }
        if state.is_converged {
            break;
        }
        result.iterations += 1;
        state.merge_beta_into_alpha();
    }
    Ok(result)
}
