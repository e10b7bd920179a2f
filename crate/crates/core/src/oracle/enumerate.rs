use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::adjacent_pairs;
use crate::config::LotteryConfig;
use crate::error::{Error, Result};
use crate::exact::{binomial, Natural};
use crate::model::StreakCounts;

pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// `size`-subsets of `low..=high` in lexicographic order.
///
/// Successor rule: bump the rightmost element that still has room, then reset
/// everything to its right to consecutive values.
#[derive(Debug, Clone)]
pub struct Combinations {
    high: u32,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(low: u32, high: u32, size: usize) -> Self {
        let available = if low > high {
            0
        } else {
            u64::from(high - low) + 1
        };
        let done = size as u64 > available;
        Combinations {
            high,
            current: (0..size as u32).map(|i| low + i).collect(),
            started: false,
            done,
        }
    }

    /// Advances to the next subset and returns it.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let size = self.current.len() as u32;
        let pivot = (0..self.current.len())
            .rev()
            .find(|&i| self.current[i] < self.high - (size - 1 - i as u32));
        match pivot {
            None => {
                self.done = true;
                None
            }
            Some(i) => {
                self.current[i] += 1;
                for j in i + 1..self.current.len() {
                    self.current[j] = self.current[j - 1] + 1;
                }
                Some(&self.current)
            }
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.advance().map(<[u32]>::to_vec)
    }
}

/// Counts every draw of `config` by walking all subsets.
///
/// The lexicographic range is split by smallest number and the slices are
/// counted in parallel; the result does not depend on the thread count.
pub fn enumerate_exact(config: LotteryConfig, limit: u64) -> Result<StreakCounts> {
    let subsets = binomial(config.pool_size().into(), config.draw_size().into());
    if subsets > Natural::from(limit) {
        return Err(Error::EnumerationLimit {
            subsets: subsets.to_string(),
            limit,
        });
    }
    let pool = config.pool_size();
    let draw = config.draw_size();
    let categories = config.category_count();
    let rest = draw as usize - 1;

    let counts = (1..=pool - draw + 1)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; categories];
            let mut tail = Combinations::new(first + 1, pool, rest);
            while let Some(t) = tail.advance() {
                let lead = usize::from(t.first() == Some(&(first + 1)));
                counts[lead + adjacent_pairs(t)] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; categories],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    debug_assert_eq!(
        counts.iter().sum::<u64>(),
        subsets.to_u64().unwrap_or(u64::MAX)
    );
    Ok(StreakCounts::from_categories(
        config,
        counts.into_iter().map(Natural::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(pool: u32, draw: u32) -> LotteryConfig {
        LotteryConfig::new(pool, draw).unwrap()
    }

    fn nats(values: &[u64]) -> Vec<Natural> {
        values.iter().copied().map(Natural::from).collect()
    }

    #[test]
    fn lexicographic_order() {
        let all: Vec<_> = Combinations::new(1, 4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(Combinations::new(1, 5, 0).count(), 1);
        assert_eq!(Combinations::new(1, 3, 4).count(), 0);
        assert_eq!(Combinations::new(4, 3, 0).count(), 1);
        assert_eq!(Combinations::new(1, 10, 3).count(), 120);
    }

    #[test]
    fn small_examples() {
        let c = enumerate_exact(cfg(10, 3), DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(c.total, 120u32.into());
        assert_eq!(c.with_consecutive, 64u32.into());
        assert_eq!(c.by_category, nats(&[56, 56, 8]));
        assert_eq!(c.with_consecutive, Natural::from(120u32) - binomial(8, 3));

        let c = enumerate_exact(cfg(5, 5), DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(c.by_category, nats(&[0, 0, 0, 0, 1]));
        assert_eq!(c.with_consecutive, 1u32.into());

        let c = enumerate_exact(cfg(6, 1), DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(c.total, 6u32.into());
        assert_eq!(c.with_consecutive, 0u32.into());
    }

    #[test]
    fn refuses_large_configs() {
        let err =
            enumerate_exact(LotteryConfig::SUPERENALOTTO, DEFAULT_ENUMERATION_LIMIT).unwrap_err();
        match err {
            Error::EnumerationLimit { subsets, limit } => {
                assert_eq!(subsets, "622614630");
                assert_eq!(limit, DEFAULT_ENUMERATION_LIMIT);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(enumerate_exact(cfg(10, 3), 119).is_err());
        assert!(enumerate_exact(cfg(10, 3), 120).is_ok());
    }
}
