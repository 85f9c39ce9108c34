//! C ABI over the shortest-paths engine.
//!
//! Graphs live behind the opaque `SpeGraph` handle; every entry point
//! returns an [`SpeStatus`] code and writes results through out-pointers.
//! The generated header lands in `include/spe.h`.

use std::ffi::CStr;
use std::os::raw::c_char;
use std::path::Path;
use std::sync::OnceLock;

use sp_engine::graph::{self, transpose, weakly_connected_components, CscGraph, GraphError};
use sp_engine::solver::{self, SolverError};
use sp_engine::{CsrGraph, EdgeList, NodeId, Variant};

/// Status codes shared by every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpeStatus {
    Ok = 0,
    NullArgument = 1,
    /// A parameter was out of range or otherwise invalid for this graph.
    InvalidArgument = 2,
    /// The input file was malformed or in an unsupported format.
    ParseError = 3,
    Io = 4,
    /// A cross-check between the solvers and the oracles failed.
    VerifyFailed = 5,
}

/// Solver selection for [`spe_sssp`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpeVariant {
    Bovm = 0,
    Sovm = 1,
    Auto = 2,
}

/// Instrumentation counters from one solve.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SpeSsspStats {
    pub reached: u32,
    pub iterations: u32,
    pub edge_inspections: u64,
    pub node_inspections: u64,
}

/// Structural summary of a graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SpeGraphStats {
    pub nodes: u64,
    pub edges: u64,
    pub components: u64,
    pub s_wcc: u64,
    pub e_wcc: u64,
}

/// Byte-footprint figures for a graph of n nodes and m directed edges.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SpeMemoryModel {
    pub engine_bytes: u64,
    pub bfs_bytes: u64,
    pub eta: f64,
}

// The handle stays opaque in the header (cbindgen.toml forward-declares it).
pub struct SpeGraph {
    csr: CsrGraph,
    csc: OnceLock<CscGraph>,
}

impl SpeGraph {
    fn new(csr: CsrGraph) -> Box<Self> {
        Box::new(Self {
            csr,
            csc: OnceLock::new(),
        })
    }

    fn csc(&self) -> &CscGraph {
        self.csc.get_or_init(|| transpose(&self.csr))
    }
}

fn status_of_graph_error(e: &GraphError) -> SpeStatus {
    match e {
        GraphError::Io(_) => SpeStatus::Io,
        GraphError::Bounds { .. } => SpeStatus::InvalidArgument,
        _ => SpeStatus::ParseError,
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> SpeStatus {
    if out.is_null() {
        return SpeStatus::NullArgument;
    }
    out.write(value);
    SpeStatus::Ok
}

/// Loads a graph file (Matrix Market, edge-list text, or CSR cache; format
/// sniffed) and writes a new handle to `out`.
///
/// # Safety
/// `path` must be a valid NUL-terminated string and `out` a valid pointer.
/// The handle must be released with [`spe_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn spe_graph_load(
    path: *const c_char,
    out: *mut *mut SpeGraph,
) -> SpeStatus {
    if path.is_null() || out.is_null() {
        return SpeStatus::NullArgument;
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return SpeStatus::InvalidArgument;
    };
    match graph::io::load_graph(Path::new(path), None) {
        Ok(csr) => write_out(out, Box::into_raw(SpeGraph::new(csr))),
        Err(e) => status_of_graph_error(&e),
    }
}

/// Builds a graph from `num_edges` (src, dst) pairs laid out as a flat
/// u32 array of length 2·num_edges. When `symmetric` is true each pair is
/// mirrored. Self-loops and duplicates are dropped.
///
/// # Safety
/// `edges` must point to 2·num_edges readable u32 values (may be null only
/// when `num_edges` is 0); `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn spe_graph_from_edges(
    num_nodes: u64,
    edges: *const u32,
    num_edges: u64,
    symmetric: bool,
    out: *mut *mut SpeGraph,
) -> SpeStatus {
    if out.is_null() || (edges.is_null() && num_edges > 0) {
        return SpeStatus::NullArgument;
    }
    let pairs = std::slice::from_raw_parts(edges, (num_edges as usize) * 2);
    let mut list = Vec::with_capacity(pairs.len());
    for chunk in pairs.chunks_exact(2) {
        list.push((chunk[0], chunk[1]));
        if symmetric {
            list.push((chunk[1], chunk[0]));
        }
    }
    let directedness = if symmetric {
        graph::Directedness::UndirectedAsSymmetric
    } else {
        graph::Directedness::Directed
    };
    match EdgeList::new(num_nodes as usize, list, directedness) {
        Ok(el) => write_out(out, Box::into_raw(SpeGraph::new(CsrGraph::from_edge_list(&el)))),
        Err(_) => SpeStatus::InvalidArgument,
    }
}

/// Releases a handle returned by one of the constructors. Null is ignored.
///
/// # Safety
/// `g` must be a live handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spe_graph_free(g: *mut SpeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn spe_graph_node_count(g: *const SpeGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.csr.node_count() as u64)
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn spe_graph_edge_count(g: *const SpeGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.csr.edge_count() as u64)
}

/// Single-source shortest paths. Writes one u32 distance per node into
/// `distance_out` (capacity = node count): 0 means unreached, the source
/// reads 0. `stats_out` may be null.
///
/// # Safety
/// `g` must be a live handle and `distance_out` must have room for
/// `spe_graph_node_count(g)` values.
#[no_mangle]
pub unsafe extern "C" fn spe_sssp(
    g: *const SpeGraph,
    source: u32,
    variant: SpeVariant,
    distance_out: *mut u32,
    stats_out: *mut SpeSsspStats,
) -> SpeStatus {
    let Some(g) = g.as_ref() else {
        return SpeStatus::NullArgument;
    };
    if distance_out.is_null() {
        return SpeStatus::NullArgument;
    }
    let result = match variant {
        SpeVariant::Bovm => solver::sssp(&g.csr, Some(g.csc()), source, Variant::Bovm),
        SpeVariant::Sovm => solver::sssp(&g.csr, None, source, Variant::Sovm),
        SpeVariant::Auto => solver::sssp(&g.csr, None, source, Variant::Auto),
    };
    match result {
        Ok(r) => {
            std::ptr::copy_nonoverlapping(r.distance.as_ptr(), distance_out, r.distance.len());
            if !stats_out.is_null() {
                stats_out.write(SpeSsspStats {
                    reached: r.reached,
                    iterations: r.iterations,
                    edge_inspections: r.edge_inspections,
                    node_inspections: r.node_inspections,
                });
            }
            SpeStatus::Ok
        }
        Err(SolverError::SourceOutOfRange { .. }) => SpeStatus::InvalidArgument,
        Err(_) => SpeStatus::InvalidArgument,
    }
}

/// Maximum finite BFS distance from `node`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spe_eccentricity(
    g: *const SpeGraph,
    node: u32,
    out: *mut u32,
) -> SpeStatus {
    let Some(g) = g.as_ref() else {
        return SpeStatus::NullArgument;
    };
    match g.csr.eccentricity(node) {
        Ok(e) => write_out(out, e),
        Err(_) => SpeStatus::InvalidArgument,
    }
}

/// Node/edge totals plus weakly-connected-component statistics.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spe_graph_stats(
    g: *const SpeGraph,
    out: *mut SpeGraphStats,
) -> SpeStatus {
    let Some(g) = g.as_ref() else {
        return SpeStatus::NullArgument;
    };
    let wcc = weakly_connected_components(&g.csr);
    write_out(
        out,
        SpeGraphStats {
            nodes: g.csr.node_count() as u64,
            edges: g.csr.edge_count() as u64,
            components: wcc.component_count() as u64,
            s_wcc: wcc.s_wcc(),
            e_wcc: wcc.e_wcc(),
        },
    )
}

/// Byte-footprint model for n nodes and m directed edges; n must be ≥ 1.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spe_memory_model(n: u64, m: u64, out: *mut SpeMemoryModel) -> SpeStatus {
    if n == 0 {
        return SpeStatus::InvalidArgument;
    }
    let model = graph::memory_model(n, m);
    write_out(
        out,
        SpeMemoryModel {
            engine_bytes: model.engine_bytes,
            bfs_bytes: model.bfs_bytes,
            eta: model.eta,
        },
    )
}

/// Cross-checks both solvers against the oracles from every node (graphs
/// this is called on should be small). Returns `Ok` when all checks pass.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn spe_verify(g: *const SpeGraph) -> SpeStatus {
    let Some(g) = g.as_ref() else {
        return SpeStatus::NullArgument;
    };
    let sources: Vec<NodeId> = (0..g.csr.node_count() as NodeId).collect();
    match sp_engine::verify::verify_sources(&g.csr, &sources) {
        Ok(_) => SpeStatus::Ok,
        Err(_) => SpeStatus::VerifyFailed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn graph_from(edges: &[(u32, u32)], n: u64, symmetric: bool) -> *mut SpeGraph {
        let flat: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let mut handle: *mut SpeGraph = std::ptr::null_mut();
        let status = spe_graph_from_edges(
            n,
            flat.as_ptr(),
            edges.len() as u64,
            symmetric,
            &mut handle,
        );
        assert_eq!(status, SpeStatus::Ok);
        handle
    }

    #[test]
    fn build_solve_and_free() {
        unsafe {
            let g = graph_from(&[(0, 1), (1, 2), (2, 3)], 4, false);
            assert_eq!(spe_graph_node_count(g), 4);
            assert_eq!(spe_graph_edge_count(g), 3);

            let mut distance = vec![0u32; 4];
            let mut stats = SpeSsspStats::default();
            let status = spe_sssp(g, 0, SpeVariant::Auto, distance.as_mut_ptr(), &mut stats);
            assert_eq!(status, SpeStatus::Ok);
            assert_eq!(distance, vec![0, 1, 2, 3]);
            assert_eq!(stats.iterations, 3);
            assert_eq!(stats.reached, 3);

            let bovm_status = spe_sssp(g, 0, SpeVariant::Bovm, distance.as_mut_ptr(), &mut stats);
            assert_eq!(bovm_status, SpeStatus::Ok);
            assert_eq!(distance, vec![0, 1, 2, 3]);

            assert_eq!(spe_verify(g), SpeStatus::Ok);
            spe_graph_free(g);
        }
    }

    #[test]
    fn symmetric_edges_are_mirrored() {
        unsafe {
            let g = graph_from(&[(0, 1)], 2, true);
            assert_eq!(spe_graph_edge_count(g), 2);
            spe_graph_free(g);
        }
    }

    #[test]
    fn error_codes_for_bad_calls() {
        unsafe {
            let g = graph_from(&[(0, 1)], 2, false);
            let mut distance = vec![0u32; 2];
            assert_eq!(
                spe_sssp(g, 9, SpeVariant::Auto, distance.as_mut_ptr(), std::ptr::null_mut()),
                SpeStatus::InvalidArgument
            );
            assert_eq!(
                spe_sssp(
                    std::ptr::null(),
                    0,
                    SpeVariant::Auto,
                    distance.as_mut_ptr(),
                    std::ptr::null_mut()
                ),
                SpeStatus::NullArgument
            );
            let mut out: *mut SpeGraph = std::ptr::null_mut();
            // Edge endpoint 5 is out of range for 2 nodes.
            let flat = [0u32, 5];
            assert_eq!(
                spe_graph_from_edges(2, flat.as_ptr(), 1, false, &mut out),
                SpeStatus::InvalidArgument
            );
            let mut model = SpeMemoryModel::default();
            assert_eq!(spe_memory_model(0, 5, &mut model), SpeStatus::InvalidArgument);
            assert_eq!(spe_memory_model(1, 1, &mut model), SpeStatus::Ok);
            assert!((model.eta - 7.0 / 12.0).abs() < 1e-15);
            spe_graph_free(g);
        }
    }

    #[test]
    fn stats_cover_components() {
        unsafe {
            let g = graph_from(&[(0, 1), (1, 2), (3, 4)], 5, false);
            let mut stats = SpeGraphStats::default();
            assert_eq!(spe_graph_stats(g, &mut stats), SpeStatus::Ok);
            assert_eq!(stats.components, 2);
            assert_eq!(stats.s_wcc, 3);
            assert_eq!(stats.e_wcc, 2);
            spe_graph_free(g);
        }
    }

    #[test]
    fn load_missing_file_reports_io() {
        unsafe {
            let mut out: *mut SpeGraph = std::ptr::null_mut();
            let path = std::ffi::CString::new("/nonexistent/graph.mtx").unwrap();
            assert_eq!(spe_graph_load(path.as_ptr(), &mut out), SpeStatus::Io);
        }
    }

    #[test]
    fn generated_header_declares_the_surface() {
        let header = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/spe.h"),
        )
        .expect("build script writes include/spe.h");
        for symbol in [
            "typedef struct SpeGraph SpeGraph;",
            "spe_graph_load",
            "spe_graph_from_edges",
            "spe_graph_free",
            "spe_sssp",
            "spe_graph_stats",
            "spe_memory_model",
            "spe_verify",
            "SPE_H",
        ] {
            assert!(header.contains(symbol), "header missing {symbol}");
        }
    }
}
