//! Report structures and serialization.

use serde::{Deserialize, Serialize};

use crate::graph::NodeId;

use super::{BenchConfig, BenchError};

/// One source's timing record at the baseline thread count.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SourceSample {
    pub source: NodeId,
    pub trimmed_mean_s: f64,
    pub raw_s: Vec<f64>,
    pub retained_s: Vec<f64>,
}

/// One thread-count sweep.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ThreadSample {
    pub threads: usize,
    pub raw_batch_s: Vec<f64>,
    /// Batch runs kept by the trim; the mean below covers only these.
    pub retained: usize,
    pub mean_batch_s: f64,
    pub mean_sssp_s: f64,
    pub efficiency: f64,
}

/// Aggregated output of one harness run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BenchReport {
    pub graph_name: String,
    pub nodes: u64,
    pub edges: u64,
    pub config: BenchConfig,
    /// The thread count every efficiency entry is measured against.
    pub baseline_threads: usize,
    /// Headline result: trimmed seconds per SSSP at the baseline.
    pub trimmed_mean_sssp_s: f64,
    pub per_thread: Vec<ThreadSample>,
    pub per_source: Vec<SourceSample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown report format {other:?} (expected json or csv)")),
        }
    }
}

pub const CSV_HEADER: &str = "graph,threads,mean_s,samples_retained,efficiency";

/// Serializes the report. JSON keeps the full structure with stable field
/// order; CSV emits one row per thread-count sweep with times in scientific
/// notation at 7 significant digits.
pub fn emit_report(report: &BenchReport, format: ReportFormat) -> Result<Vec<u8>, BenchError> {
    match format {
        ReportFormat::Json => {
            let mut bytes =
                serde_json::to_vec_pretty(report).expect("report serialization cannot fail");
            bytes.push(b'\n');
            Ok(bytes)
        }
        ReportFormat::Csv => {
            let mut out = String::new();
            out.push_str(CSV_HEADER);
            out.push('\n');
            for row in &report.per_thread {
                out.push_str(&format!(
                    "{},{},{:.6e},{},{:.6}\n",
                    report.graph_name, row.threads, row.mean_sssp_s, row.retained, row.efficiency
                ));
            }
            Ok(out.into_bytes())
        }
    }
}
