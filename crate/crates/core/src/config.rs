use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A k-of-N lottery: `draw_size` distinct numbers drawn from `1..=pool_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LotteryConfig {
    pool_size: u32,
    draw_size: u32,
}

impl LotteryConfig {
    /// Six numbers out of ninety.
    pub const SUPERENALOTTO: LotteryConfig = LotteryConfig {
        pool_size: 90,
        draw_size: 6,
    };

    pub fn new(pool_size: u32, draw_size: u32) -> Result<Self> {
        if draw_size == 0 || draw_size > pool_size {
            return Err(Error::InvalidConfig {
                pool_size,
                draw_size,
            });
        }
        Ok(LotteryConfig {
            pool_size,
            draw_size,
        })
    }

    pub fn pool_size(&self) -> u32 {
        self.pool_size
    }

    pub fn draw_size(&self) -> u32 {
        self.draw_size
    }

    /// Number of categories `0..draw_size`, i.e. possible adjacent-pair counts.
    pub fn category_count(&self) -> usize {
        self.draw_size as usize
    }

    /// Sum every gap decomposition must reach: `pool_size - draw_size`.
    pub fn gap_total(&self) -> u32 {
        self.pool_size - self.draw_size
    }

    /// Interior gaps, the ones that are zero for an adjacent pair.
    pub fn interior_gaps(&self) -> u32 {
        self.draw_size - 1
    }

    /// Every legal configuration with `pool_size <= max_pool`, ordered by
    /// pool then draw size.
    pub fn all_up_to(max_pool: u32) -> impl Iterator<Item = LotteryConfig> {
        (1..=max_pool).flat_map(|pool_size| {
            (1..=pool_size).map(move |draw_size| LotteryConfig {
                pool_size,
                draw_size,
            })
        })
    }
}

impl Default for LotteryConfig {
    fn default() -> Self {
        Self::SUPERENALOTTO
    }
}

impl std::fmt::Display for LotteryConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-of-{}", self.draw_size, self.pool_size)
    }
}
