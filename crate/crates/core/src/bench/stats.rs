//! Outlier trimming and scaling-efficiency arithmetic.

use statrs::distribution::{ContinuousCDF, StudentsT};

use super::BenchError;

/// Student-t critical value: the quantile of the t distribution with `df`
/// degrees of freedom at probability `confidence`.
pub fn t_critical(confidence: f64, df: usize) -> f64 {
    StudentsT::new(0.0, 1.0, df as f64)
        .expect("df >= 1")
        .inverse_cdf(confidence)
}

/// Single-pass t-distribution trim.
///
/// Computes the sample mean and standard deviation, then drops every sample
/// outside mean ± t(confidence, df = len−1) · sd. The pass runs once — no
/// iteration to a fixpoint — and a zero-variance series is returned whole.
/// Needs at least 3 samples.
pub fn trim_samples(samples: &[f64], confidence: f64) -> Result<Vec<f64>, BenchError> {
    let len = samples.len();
    if len < 3 {
        return Err(BenchError::TooFewSamples(len));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(BenchError::BadConfidence(confidence));
    }
    let mean = samples.iter().sum::<f64>() / len as f64;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (len - 1) as f64;
    let sd = var.sqrt();
    if sd == 0.0 {
        return Ok(samples.to_vec());
    }
    let radius = t_critical(confidence, len - 1) * sd;
    Ok(samples
        .iter()
        .copied()
        .filter(|x| (x - mean).abs() <= radius)
        .collect())
}

/// Scaling efficiency of a sweep relative to the baseline sweep:
/// `base_time / (time × threads/base_threads)`. The baseline itself is 1 by
/// definition.
pub fn efficiency(base_threads: usize, base_time: f64, threads: usize, time: f64) -> f64 {
    if threads == base_threads {
        return 1.0;
    }
    let scale = threads as f64 / base_threads as f64;
    base_time / (time * scale)
}
