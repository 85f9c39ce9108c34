//! Random source selection.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{NodeId, WccSummary};

use super::BenchError;

/// Draws `k` distinct node ids uniformly from `0..n`, deterministic for a
/// fixed seed.
///
/// The component summary is accepted but deliberately unused: the protocol
/// samples over the whole node set, so sources are not restricted to the
/// largest component and short constant-time solves from small components
/// stay in the measurement.
pub fn sample_sources(
    n: usize,
    k: usize,
    seed: u64,
    _wcc: Option<&WccSummary>,
) -> Result<Vec<NodeId>, BenchError> {
    if k > n {
        return Err(BenchError::SampleTooLarge { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(rand::seq::index::sample(&mut rng, n, k)
        .iter()
        .map(|i| i as NodeId)
        .collect())
}
