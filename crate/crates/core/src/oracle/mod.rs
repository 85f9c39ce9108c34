//! Reference implementations used for correctness checking: a textbook
//! queue BFS with instrumentation, and an integer matrix-power path counter.
//! These favor clarity over speed and are independent of the solver code
//! paths they validate.

mod bfs;
mod power;

pub use bfs::{bfs_baseline, BfsTrace};
pub use power::{first_hit_distance, path_count_power, DenseCountMatrix, OracleError};
