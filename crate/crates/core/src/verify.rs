//! Runtime cross-checks between the solvers, the oracles and the structural
//! analysis. `spe verify` and the acceptance suite both run through here.
//!
//! For each source the checks are:
//!
//! 1. SOVM, BOVM and the queue-BFS baseline produce identical distances.
//! 2. Layers are contiguous: a node at distance k ≥ 2 implies someone sits
//!    at distance k − 1.
//! 3. Every node at distance k ≥ 2 has an in-neighbor at distance k − 1
//!    (a length-k shortest path splits into k−1 and 1).
//! 4. SOVM edge inspections equal the out-degree sum over the reachable
//!    set, and never exceed the edge count of the source's component.
//! 5. Productive rounds equal the source's eccentricity whenever anything
//!    is reachable, and SOVM never overwrites a settled node.

use thiserror::Error;

use crate::graph::{transpose, weakly_connected_components, CscGraph, CsrGraph, NodeId, WccSummary};
use crate::oracle::bfs_baseline;
use crate::solver::{sssp_bovm, sssp_sovm};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyFailure {
    #[error("{left} and {right} disagree from source {source_node} at node {node}: {left_value} vs {right_value}")]
    DistanceMismatch {
        left: &'static str,
        right: &'static str,
        source_node: NodeId,
        node: NodeId,
        left_value: u32,
        right_value: u32,
    },
    #[error("source {source_node}: layer {layer} is empty but node {witness} sits at layer {next}")]
    LayerGap {
        source_node: NodeId,
        layer: u32,
        next: u32,
        witness: NodeId,
    },
    #[error("source {source_node}: node {node} at distance {distance} has no in-neighbor at distance {prev}", prev = .distance - 1)]
    MissingPredecessorLayer {
        source_node: NodeId,
        node: NodeId,
        distance: u32,
    },
    #[error("source {source_node}: edge inspections {actual} != out-degree sum {expected} over the reachable set")]
    InspectionMismatch {
        source_node: NodeId,
        actual: u64,
        expected: u64,
    },
    #[error("source {source_node}: edge inspections {actual} exceed component edge count {component_edges}")]
    InspectionAboveComponent {
        source_node: NodeId,
        actual: u64,
        component_edges: u64,
    },
    #[error("source {source_node}: {iterations} productive rounds but eccentricity {eccentricity}")]
    IterationMismatch {
        source_node: NodeId,
        iterations: u32,
        eccentricity: u32,
    },
    #[error("source {source_node}: {count} distance writes landed on settled nodes")]
    SettledOverwrites { source_node: NodeId, count: u64 },
}

/// Per-check tallies for the human-readable summary.
#[derive(Debug, Default, Clone, Copy)]
pub struct VerifySummary {
    pub sources_checked: u64,
    pub distance_comparisons: u64,
    pub layer_checks: u64,
    pub predecessor_checks: u64,
    pub accounting_checks: u64,
    pub iteration_checks: u64,
}

/// Compares two distance arrays entry by entry.
pub fn check_distances_match(
    left: &'static str,
    left_distance: &[u32],
    right: &'static str,
    right_distance: &[u32],
    source: NodeId,
) -> Result<(), VerifyFailure> {
    debug_assert_eq!(left_distance.len(), right_distance.len());
    for (node, (&a, &b)) in left_distance.iter().zip(right_distance).enumerate() {
        if a != b {
            return Err(VerifyFailure::DistanceMismatch {
                left,
                right,
                source_node: source,
                node: node as NodeId,
                left_value: a,
                right_value: b,
            });
        }
    }
    Ok(())
}

/// No distance layer may be skipped.
pub fn check_layer_contiguity(distance: &[u32], source: NodeId) -> Result<(), VerifyFailure> {
    let max = distance.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return Ok(());
    }
    let mut layer_present = vec![false; max as usize + 1];
    for &d in distance {
        layer_present[d as usize] = true;
    }
    for k in 1..=max {
        if !layer_present[k as usize] {
            let witness = distance.iter().position(|&d| d > k).unwrap_or(0) as NodeId;
            return Err(VerifyFailure::LayerGap {
                source_node: source,
                layer: k,
                next: distance[witness as usize],
                witness,
            });
        }
    }
    Ok(())
}

/// Every settled node at k ≥ 2 must have an in-neighbor settled at k − 1;
/// a node at distance 1 must have the source itself as an in-neighbor
/// (distance 0 in the array is ambiguous between "source" and "unreached",
/// so that layer is matched by identity).
pub fn check_predecessor_layers(
    csc: &CscGraph,
    distance: &[u32],
    source: NodeId,
) -> Result<(), VerifyFailure> {
    for (node, &d) in distance.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let ok = csc.in_neighbors(node as NodeId).iter().any(|&p| {
            if d == 1 {
                p == source
            } else {
                distance[p as usize] == d - 1
            }
        });
        if !ok {
            return Err(VerifyFailure::MissingPredecessorLayer {
                source_node: source,
                node: node as NodeId,
                distance: d,
            });
        }
    }
    Ok(())
}

/// Runs every check for one source.
pub fn verify_source(
    csr: &CsrGraph,
    csc: &CscGraph,
    wcc: &WccSummary,
    source: NodeId,
    summary: &mut VerifySummary,
) -> Result<(), VerifyFailure> {
    let sovm = sssp_sovm(csr, source).expect("source validated by caller");
    let bovm = sssp_bovm(csc, source).expect("source validated by caller");
    let oracle = bfs_baseline(csr, source).expect("source validated by caller");

    check_distances_match("sovm", &sovm.distance, "bovm", &bovm.distance, source)?;
    check_distances_match("sovm", &sovm.distance, "bfs", &oracle.distance, source)?;
    summary.distance_comparisons += 2;

    check_layer_contiguity(&sovm.distance, source)?;
    summary.layer_checks += 1;

    check_predecessor_layers(csc, &sovm.distance, source)?;
    summary.predecessor_checks += 1;

    let expected: u64 = (0..csr.node_count() as NodeId)
        .filter(|&j| sovm.is_reached(j))
        .map(|j| csr.out_degree(j) as u64)
        .sum();
    if sovm.edge_inspections != expected {
        return Err(VerifyFailure::InspectionMismatch {
            source_node: source,
            actual: sovm.edge_inspections,
            expected,
        });
    }
    let component_edges = wcc.e_wcc_of(source);
    if sovm.edge_inspections > component_edges {
        return Err(VerifyFailure::InspectionAboveComponent {
            source_node: source,
            actual: sovm.edge_inspections,
            component_edges,
        });
    }
    summary.accounting_checks += 1;

    if sovm.reached > 0 {
        let ecc = csr.eccentricity(source).expect("source in range");
        for iterations in [sovm.iterations, bovm.iterations] {
            if iterations != ecc {
                return Err(VerifyFailure::IterationMismatch {
                    source_node: source,
                    iterations,
                    eccentricity: ecc,
                });
            }
        }
    }
    for r in [&sovm, &bovm] {
        if r.settled_overwrites != 0 {
            return Err(VerifyFailure::SettledOverwrites {
                source_node: source,
                count: r.settled_overwrites,
            });
        }
    }
    summary.iteration_checks += 1;

    summary.sources_checked += 1;
    Ok(())
}

/// Verifies the given sources, stopping at the first counterexample.
pub fn verify_sources(
    csr: &CsrGraph,
    sources: &[NodeId],
) -> Result<VerifySummary, VerifyFailure> {
    let csc = transpose(csr);
    let wcc = weakly_connected_components(csr);
    let mut summary = VerifySummary::default();
    for &s in sources {
        verify_source(csr, &csc, &wcc, s, &mut summary)?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen;

    #[test]
    fn fixtures_verify_clean() {
        for g in [
            gen::path(8),
            gen::cycle(8),
            gen::star(8),
            gen::complete(8),
            gen::disjoint_union(&gen::path(4), &gen::cycle(5)),
        ] {
            let sources: Vec<NodeId> = (0..g.node_count() as NodeId).collect();
            let summary = verify_sources(&g, &sources).unwrap();
            assert_eq!(summary.sources_checked, g.node_count() as u64);
        }
    }

    #[test]
    fn corrupted_distance_array_names_the_node() {
        let g = gen::path(5);
        let good = sssp_sovm(&g, 0).unwrap();
        let mut bad = good.distance.clone();
        bad[3] = 7;
        let err = check_distances_match("sovm", &good.distance, "shim", &bad, 0).unwrap_err();
        assert_eq!(
            err,
            VerifyFailure::DistanceMismatch {
                left: "sovm",
                right: "shim",
                source_node: 0,
                node: 3,
                left_value: 3,
                right_value: 7,
            }
        );
    }

    #[test]
    fn layer_gap_is_detected() {
        // Distances claiming layer 2 is empty while layer 3 is occupied.
        let distance = vec![0, 1, 0, 3];
        assert!(matches!(
            check_layer_contiguity(&distance, 0),
            Err(VerifyFailure::LayerGap { layer: 2, .. })
        ));
    }

    #[test]
    fn random_graphs_verify_clean() {
        for seed in 0..10u64 {
            let g = gen::er_digraph(48, 0.07, seed);
            let sources: Vec<NodeId> = (0..48).collect();
            verify_sources(&g, &sources).unwrap();
        }
    }
}
