//! Measurement harness: random source sets, repeated timed runs,
//! t-distribution outlier trimming, and multi-threading efficiency.
//!
//! Timing covers solver work only — graphs arrive already built, transposes
//! for the BOVM variant are taken before the clock starts, and each thread
//! count gets a fresh worker pool that is torn down before the next sweep.

mod report;
mod sample;
mod stats;

pub use report::{emit_report, BenchReport, ReportFormat, SourceSample, ThreadSample};
pub use sample::sample_sources;
pub use stats::{efficiency, t_critical, trim_samples};

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{transpose, CscGraph, CsrGraph, NodeId};
use crate::solver::{self, SolverError, Variant};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("requested {k} sources from a graph with {n} nodes")]
    SampleTooLarge { k: usize, n: usize },
    #[error("need at least 3 samples to trim, got {0}")]
    TooFewSamples(usize),
    #[error("trim confidence must lie strictly between 0 and 1, got {0}")]
    BadConfidence(f64),
    #[error("thread counts must be non-empty, positive and sorted ascending")]
    BadThreadCounts,
    #[error("runs_per_source must be at least 1")]
    BadRuns,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Protocol parameters. Defaults follow the measurement protocol this
/// harness reproduces: 500 random sources, 64 runs each, trimming at 0.95.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BenchConfig {
    pub source_count: usize,
    pub runs_per_source: usize,
    pub seed: u64,
    pub thread_counts: Vec<usize>,
    pub variant: Variant,
    pub trim_confidence: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            source_count: 500,
            runs_per_source: 64,
            seed: 0,
            thread_counts: vec![1],
            variant: Variant::Auto,
            trim_confidence: 0.95,
        }
    }
}

impl BenchConfig {
    fn validate(&self, n: usize) -> Result<(), BenchError> {
        if self.source_count > n {
            return Err(BenchError::SampleTooLarge {
                k: self.source_count,
                n,
            });
        }
        if self.runs_per_source < 1 {
            return Err(BenchError::BadRuns);
        }
        if self.thread_counts.is_empty()
            || self.thread_counts.iter().any(|&t| t == 0)
            || self.thread_counts.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(BenchError::BadThreadCounts);
        }
        if !(self.trim_confidence > 0.0 && self.trim_confidence < 1.0) {
            return Err(BenchError::BadConfidence(self.trim_confidence));
        }
        Ok(())
    }
}

/// Runs the full protocol on `csr` and aggregates a report.
///
/// For every configured thread count the source batch is solved
/// `runs_per_source` times; batch wall times are trimmed (when at least 3
/// samples exist) and averaged into that sweep's time. Per-SSSP samples are
/// collected at the baseline (smallest) thread count, trimmed per source,
/// and averaged into the headline seconds-per-SSSP figure. Efficiency is
/// relative to the baseline sweep and equals 1 there by construction.
pub fn run_bench(
    csr: &CsrGraph,
    cfg: &BenchConfig,
    graph_name: &str,
) -> Result<BenchReport, BenchError> {
    let n = csr.node_count();
    cfg.validate(n)?;
    let sources = sample_sources(n, cfg.source_count, cfg.seed, None)?;
    let csc = match cfg.variant {
        Variant::Bovm => Some(transpose(csr)),
        Variant::Sovm | Variant::Auto => None,
    };
    let baseline_threads = cfg.thread_counts[0];

    let mut per_thread = Vec::with_capacity(cfg.thread_counts.len());
    let mut per_source_samples: Vec<Vec<f64>> = vec![Vec::new(); sources.len()];

    for &threads in &cfg.thread_counts {
        let pool = solver::build_pool(threads)?;
        let mut batch_times = Vec::with_capacity(cfg.runs_per_source);
        for _ in 0..cfg.runs_per_source {
            let (batch_s, task_s) = run_batch(csr, csc.as_ref(), &sources, &pool, cfg.variant);
            batch_times.push(batch_s);
            if threads == baseline_threads {
                for (slot, s) in per_source_samples.iter_mut().zip(&task_s) {
                    slot.push(*s);
                }
            }
        }
        let retained = trim_when_possible(&batch_times, cfg.trim_confidence)?;
        let mean_batch_s = mean(&retained);
        per_thread.push(ThreadSample {
            threads,
            raw_batch_s: batch_times,
            retained: retained.len(),
            mean_batch_s,
            mean_sssp_s: mean_batch_s / sources.len().max(1) as f64,
            efficiency: 0.0, // filled below once the baseline time is known
        });
        // pool drops here: sweeps never share workers
    }

    let base_time = per_thread[0].mean_batch_s;
    for row in &mut per_thread {
        row.efficiency = efficiency(baseline_threads, base_time, row.threads, row.mean_batch_s);
    }

    let mut per_source = Vec::with_capacity(sources.len());
    for (&source, raw) in sources.iter().zip(&per_source_samples) {
        let retained = trim_when_possible(raw, cfg.trim_confidence)?;
        per_source.push(SourceSample {
            source,
            trimmed_mean_s: mean(&retained),
            raw_s: raw.clone(),
            retained_s: retained,
        });
    }
    let trimmed_mean_sssp_s = mean(
        &per_source
            .iter()
            .map(|s| s.trimmed_mean_s)
            .collect::<Vec<_>>(),
    );

    Ok(BenchReport {
        graph_name: graph_name.to_string(),
        nodes: n as u64,
        edges: csr.edge_count() as u64,
        config: cfg.clone(),
        baseline_threads,
        trimmed_mean_sssp_s,
        per_thread,
        per_source,
    })
}

/// One timed batch: wall time plus a per-source time measured inside the
/// worker that ran it. Durations are clamped to a nanosecond so downstream
/// ratios stay finite.
fn run_batch(
    csr: &CsrGraph,
    csc: Option<&CscGraph>,
    sources: &[NodeId],
    pool: &rayon::ThreadPool,
    variant: Variant,
) -> (f64, Vec<f64>) {
    use rayon::prelude::*;
    let started = Instant::now();
    let task_s: Vec<f64> = pool.install(|| {
        sources
            .par_iter()
            .map(|&s| {
                let t0 = Instant::now();
                let result = match variant {
                    Variant::Bovm => {
                        solver::sssp_bovm(csc.expect("transpose prepared for bovm"), s)
                    }
                    Variant::Sovm | Variant::Auto => solver::sssp_sovm(csr, s),
                };
                std::hint::black_box(result.expect("sampled sources are in range"));
                clamp_seconds(t0.elapsed().as_secs_f64())
            })
            .collect()
    });
    (clamp_seconds(started.elapsed().as_secs_f64()), task_s)
}

fn clamp_seconds(s: f64) -> f64 {
    s.max(1e-9)
}

/// The protocol trims whenever a trim is defined; single- and double-sample
/// series are kept whole instead of failing the run.
fn trim_when_possible(samples: &[f64], confidence: f64) -> Result<Vec<f64>, BenchError> {
    if samples.len() < 3 {
        Ok(samples.to_vec())
    } else {
        trim_samples(samples, confidence)
    }
}

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}
