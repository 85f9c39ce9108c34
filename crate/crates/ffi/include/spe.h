#ifndef SPE_H
#define SPE_H

/* Generated by cbindgen from sp-engine-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct SpeGraph SpeGraph;

/**
 * Status codes shared by every FFI call.
 */
typedef enum SpeStatus {
  SpeStatus_Ok = 0,
  SpeStatus_NullArgument = 1,
  /**
   * A parameter was out of range or otherwise invalid for this graph.
   */
  SpeStatus_InvalidArgument = 2,
  /**
   * The input file was malformed or in an unsupported format.
   */
  SpeStatus_ParseError = 3,
  SpeStatus_Io = 4,
  /**
   * A cross-check between the solvers and the oracles failed.
   */
  SpeStatus_VerifyFailed = 5,
} SpeStatus;

/**
 * Solver selection for [`spe_sssp`].
 */
typedef enum SpeVariant {
  SpeVariant_Bovm = 0,
  SpeVariant_Sovm = 1,
  SpeVariant_Auto = 2,
} SpeVariant;

/**
 * Instrumentation counters from one solve.
 */
typedef struct SpeSsspStats {
  uint32_t reached;
  uint32_t iterations;
  uint64_t edge_inspections;
  uint64_t node_inspections;
} SpeSsspStats;

/**
 * Structural summary of a graph.
 */
typedef struct SpeGraphStats {
  uint64_t nodes;
  uint64_t edges;
  uint64_t components;
  uint64_t s_wcc;
  uint64_t e_wcc;
} SpeGraphStats;

/**
 * Byte-footprint figures for a graph of n nodes and m directed edges.
 */
typedef struct SpeMemoryModel {
  uint64_t engine_bytes;
  uint64_t bfs_bytes;
  double eta;
} SpeMemoryModel;

/**
 * Loads a graph file (Matrix Market, edge-list text, or CSR cache; format
 * sniffed) and writes a new handle to `out`.
 *
 * # Safety
 * `path` must be a valid NUL-terminated string and `out` a valid pointer.
 * The handle must be released with [`spe_graph_free`].
 */
enum SpeStatus spe_graph_load(const char *path, SpeGraph **out);

/**
 * Builds a graph from `num_edges` (src, dst) pairs laid out as a flat
 * u32 array of length 2·num_edges. When `symmetric` is true each pair is
 * mirrored. Self-loops and duplicates are dropped.
 *
 * # Safety
 * `edges` must point to 2·num_edges readable u32 values (may be null only
 * when `num_edges` is 0); `out` must be valid.
 */
enum SpeStatus spe_graph_from_edges(uint64_t num_nodes,
                                    const uint32_t *edges,
                                    uint64_t num_edges,
                                    bool symmetric,
                                    SpeGraph **out);

/**
 * Releases a handle returned by one of the constructors. Null is ignored.
 *
 * # Safety
 * `g` must be a live handle from this library, not yet freed.
 */
void spe_graph_free(SpeGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint64_t spe_graph_node_count(const SpeGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint64_t spe_graph_edge_count(const SpeGraph *g);

/**
 * Single-source shortest paths. Writes one u32 distance per node into
 * `distance_out` (capacity = node count): 0 means unreached, the source
 * reads 0. `stats_out` may be null.
 *
 * # Safety
 * `g` must be a live handle and `distance_out` must have room for
 * `spe_graph_node_count(g)` values.
 */
enum SpeStatus spe_sssp(const SpeGraph *g,
                        uint32_t source,
                        enum SpeVariant variant,
                        uint32_t *distance_out,
                        struct SpeSsspStats *stats_out);

/**
 * Maximum finite BFS distance from `node`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SpeStatus spe_eccentricity(const SpeGraph *g, uint32_t node, uint32_t *out);

/**
 * Node/edge totals plus weakly-connected-component statistics.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SpeStatus spe_graph_stats(const SpeGraph *g, struct SpeGraphStats *out);

/**
 * Byte-footprint model for n nodes and m directed edges; n must be ≥ 1.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SpeStatus spe_memory_model(uint64_t n, uint64_t m, struct SpeMemoryModel *out);

/**
 * Cross-checks both solvers against the oracles from every node (graphs
 * this is called on should be small). Returns `Ok` when all checks pass.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum SpeStatus spe_verify(const SpeGraph *g);

#endif /* SPE_H */
