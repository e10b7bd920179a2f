//! Gap form of a sorted draw.
//!
//! A draw `a_1 < ... < a_n` from `1..=N` is written as
//! `s_1 a_1 s_2 a_2 ... a_n s_{n+1}` where `s_1 = a_1 - 1`,
//! `s_{i+1} = a_{i+1} - a_i - 1` and `s_{n+1} = N - a_n`. The gaps sum to
//! `N - n`, and the map is a bijection onto such vectors.

use serde::{Deserialize, Serialize};

use crate::config::LotteryConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GapDecomposition {
    gaps: Vec<u32>,
}

impl GapDecomposition {
    /// Validates length `draw_size + 1` and sum `pool_size - draw_size`.
    pub fn new(config: LotteryConfig, gaps: Vec<u32>) -> Result<Self> {
        let expected_len = config.draw_size() as usize + 1;
        if gaps.len() != expected_len {
            return Err(Error::InvalidGaps(format!(
                "expected {expected_len} gaps, got {}",
                gaps.len()
            )));
        }
        let sum: u64 = gaps.iter().map(|&g| u64::from(g)).sum();
        if sum != u64::from(config.gap_total()) {
            return Err(Error::InvalidGaps(format!(
                "gaps sum to {sum}, expected {}",
                config.gap_total()
            )));
        }
        Ok(GapDecomposition { gaps })
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// The gaps strictly between drawn numbers.
    pub fn interior(&self) -> &[u32] {
        &self.gaps[1..self.gaps.len() - 1]
    }

    /// Each zero interior gap is one adjacent pair.
    pub fn zero_interior_gaps(&self) -> usize {
        self.interior().iter().filter(|&&g| g == 0).count()
    }
}

/// Checks that `numbers` is a valid draw for `config`.
pub(crate) fn validate_draw(config: LotteryConfig, numbers: &[u32]) -> Result<()> {
    if numbers.len() != config.draw_size() as usize {
        return Err(Error::InvalidDraw(format!(
            "expected {} numbers, got {}",
            config.draw_size(),
            numbers.len()
        )));
    }
    if let Some(&n) = numbers.iter().find(|&&n| n == 0 || n > config.pool_size()) {
        return Err(Error::InvalidDraw(format!(
            "{n} is outside 1..={}",
            config.pool_size()
        )));
    }
    if let Some(w) = numbers.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDraw(if w[0] == w[1] {
            format!("duplicate number {}", w[0])
        } else {
            format!("numbers not increasing at {} > {}", w[0], w[1])
        }));
    }
    Ok(())
}

pub fn draw_to_gaps(config: LotteryConfig, numbers: &[u32]) -> Result<GapDecomposition> {
    validate_draw(config, numbers)?;
    let mut gaps = Vec::with_capacity(numbers.len() + 1);
    let mut previous = 0;
    for &n in numbers {
        gaps.push(n - previous - 1);
        previous = n;
    }
    gaps.push(config.pool_size() - previous);
    Ok(GapDecomposition { gaps })
}

pub fn gaps_to_draw(config: LotteryConfig, gaps: &GapDecomposition) -> Result<Vec<u32>> {
    // re-check: the decomposition may have been built for another config
    let gaps = GapDecomposition::new(config, gaps.gaps.clone())?;
    let mut numbers = Vec::with_capacity(config.draw_size() as usize);
    let mut position = 0;
    for &g in &gaps.gaps[..gaps.gaps.len() - 1] {
        position += g + 1;
        numbers.push(position);
    }
    Ok(numbers)
}
