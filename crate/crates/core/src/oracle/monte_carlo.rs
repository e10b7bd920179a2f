//! Seeded Monte Carlo estimate of the category frequencies.
//!
//! The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`, and
//! indices are drawn as `u32`, so a given `(config, trials, seed)` produces
//! the same output on every platform. Sampling is strictly sequential.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::adjacent_pairs;
use crate::config::LotteryConfig;
use crate::error::{Error, Result};
use crate::model::StreakCounts;

/// Uniform draws via partial Fisher-Yates over a persistent permutation.
pub struct DrawSampler {
    draw_size: usize,
    pool: Vec<u32>,
    draw: Vec<u32>,
    rng: ChaCha8Rng,
}

impl DrawSampler {
    pub fn new(config: LotteryConfig, seed: u64) -> Self {
        DrawSampler {
            draw_size: config.draw_size() as usize,
            pool: (1..=config.pool_size()).collect(),
            draw: Vec::with_capacity(config.draw_size() as usize),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Next draw, sorted ascending.
    pub fn next_draw(&mut self) -> &[u32] {
        let len = self.pool.len() as u32;
        for i in 0..self.draw_size {
            let j = self.rng.random_range(i as u32..len) as usize;
            self.pool.swap(i, j);
        }
        self.draw.clear();
        self.draw.extend_from_slice(&self.pool[..self.draw_size]);
        self.draw.sort_unstable();
        &self.draw
    }
}

/// Observed frequency with its binomial standard error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyEstimate {
    pub count: u64,
    pub frequency: f64,
    /// `sqrt(f (1 - f) / trials)`.
    pub std_error: f64,
}

impl FrequencyEstimate {
    fn new(count: u64, trials: u64) -> Self {
        let frequency = count as f64 / trials as f64;
        FrequencyEstimate {
            count,
            frequency,
            std_error: (frequency * (1.0 - frequency) / trials as f64).sqrt(),
        }
    }

    /// Distance from `exact` in units of the standard error implied by
    /// `exact` itself. `None` when `exact` is 0 or 1 (no spread).
    pub fn deviation_sigma(&self, exact: f64, trials: u64) -> Option<f64> {
        let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
        (sigma > 0.0).then(|| (self.frequency - exact) / sigma)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub config: LotteryConfig,
    pub trials: u64,
    pub seed: u64,
    /// Indexed by adjacent-pair count.
    pub categories: Vec<FrequencyEstimate>,
    /// Draws with at least one adjacent pair.
    pub overall: FrequencyEstimate,
}

impl MonteCarloEstimate {
    /// Deviations from the exact category probabilities in sigma units,
    /// overall first, then each category.
    pub fn deviations(&self, exact: &StreakCounts) -> (Option<f64>, Vec<Option<f64>>) {
        let overall = self
            .overall
            .deviation_sigma(exact.consecutive_probability().value, self.trials);
        let per_category = self
            .categories
            .iter()
            .enumerate()
            .map(|(k, est)| est.deviation_sigma(exact.category_probability(k).value, self.trials))
            .collect();
        (overall, per_category)
    }
}

pub fn monte_carlo(config: LotteryConfig, trials: u64, seed: u64) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut sampler = DrawSampler::new(config, seed);
    let mut counts = vec![0u64; config.category_count()];
    for _ in 0..trials {
        counts[adjacent_pairs(sampler.next_draw())] += 1;
    }
    let with_pairs: u64 = counts[1..].iter().sum();
    Ok(MonteCarloEstimate {
        config,
        trials,
        seed,
        categories: counts
            .into_iter()
            .map(|c| FrequencyEstimate::new(c, trials))
            .collect(),
        overall: FrequencyEstimate::new(with_pairs, trials),
    })
}
