//! Interchangeable ways of producing [`StreakCounts`].
//!
//! Every method implements [`StreakCounter`] and is looked up by name in a
//! [`CounterRegistry`]. The built-in methods are independent routes to the
//! same numbers, which is what makes cross-checking between them meaningful.

use std::collections::BTreeMap;

use crate::config::LotteryConfig;
use crate::error::{Error, Result};
use crate::exact::{binomial, coefficient_of, GeneratorBlock};
use crate::model::{streak_counts, StreakCounts};
use crate::oracle::enumerate::{enumerate_exact, DEFAULT_ENUMERATION_LIMIT};

pub trait StreakCounter: Send + Sync {
    /// Registry key, e.g. `"closed-form"`.
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn count(&self, config: LotteryConfig) -> Result<StreakCounts>;
}

/// Stars-and-bars closed form.
#[derive(Debug, Default, Clone, Copy)]
pub struct ClosedForm;

impl StreakCounter for ClosedForm {
    fn name(&self) -> &str {
        "closed-form"
    }

    fn description(&self) -> &str {
        "binomial placement of zero gaps times stars-and-bars fillings"
    }

    fn count(&self, config: LotteryConfig) -> Result<StreakCounts> {
        Ok(streak_counts(config))
    }
}

/// Coefficient extraction from products of truncated geometric series.
#[derive(Debug, Default, Clone, Copy)]
pub struct GeneratingFunction;

impl GeneratingFunction {
    /// Draws with no restriction on any gap.
    pub fn total(config: LotteryConfig) -> crate::exact::Natural {
        let gaps = config.draw_size() as usize + 1;
        coefficient_of(&[GeneratorBlock::new(0, gaps)], config.gap_total() as usize)
    }

    /// Draws with a fixed choice of `k` zero interior gaps, the other interior
    /// gaps forced positive.
    pub fn per_placement(config: LotteryConfig, k: u32) -> crate::exact::Natural {
        let blocks = [
            GeneratorBlock::new(0, 2),
            GeneratorBlock::new(1, (config.interior_gaps() - k) as usize),
        ];
        coefficient_of(&blocks, config.gap_total() as usize)
    }
}

impl StreakCounter for GeneratingFunction {
    fn name(&self) -> &str {
        "generating-function"
    }

    fn description(&self) -> &str {
        "coefficient of x^(N-n) in products of truncated geometric series"
    }

    fn count(&self, config: LotteryConfig) -> Result<StreakCounts> {
        let interior = u64::from(config.interior_gaps());
        let by_category = (0..config.draw_size())
            .map(|k| binomial(interior, u64::from(k)) * Self::per_placement(config, k))
            .collect();
        let mut counts = StreakCounts::from_categories(config, by_category);
        // total comes from its own unconstrained series, not the category sum
        counts.total = Self::total(config);
        Ok(counts)
    }
}

/// Visits every subset in lexicographic order.
#[derive(Debug, Clone, Copy)]
pub struct Enumeration {
    pub limit: u64,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

impl StreakCounter for Enumeration {
    fn name(&self) -> &str {
        "enumeration"
    }

    fn description(&self) -> &str {
        "exhaustive lexicographic walk over all draws (small pools only)"
    }

    fn count(&self, config: LotteryConfig) -> Result<StreakCounts> {
        enumerate_exact(config, self.limit)
    }
}

/// Counting methods keyed by name.
pub struct CounterRegistry {
    counters: BTreeMap<String, Box<dyn StreakCounter>>,
}

impl CounterRegistry {
    pub fn empty() -> Self {
        CounterRegistry {
            counters: BTreeMap::new(),
        }
    }

    /// The three built-in methods, enumeration capped at `enumeration_limit`.
    pub fn with_defaults(enumeration_limit: u64) -> Self {
        let mut registry = Self::empty();
        registry
            .register(Box::new(ClosedForm))
            .expect("fresh registry");
        registry
            .register(Box::new(GeneratingFunction))
            .expect("fresh registry");
        registry
            .register(Box::new(Enumeration {
                limit: enumeration_limit,
            }))
            .expect("fresh registry");
        registry
    }

    pub fn register(&mut self, counter: Box<dyn StreakCounter>) -> Result<()> {
        let name = counter.name().to_owned();
        if self.counters.contains_key(&name) {
            return Err(Error::DuplicateMethod(name));
        }
        self.counters.insert(name, counter);
        Ok(())
    }

    /// Registers `counter`, replacing any method of the same name.
    pub fn replace(&mut self, counter: Box<dyn StreakCounter>) {
        self.counters.insert(counter.name().to_owned(), counter);
    }

    pub fn get(&self, name: &str) -> Result<&dyn StreakCounter> {
        self.counters
            .get(name)
            .map(Box::as_ref)
            .ok_or_else(|| Error::UnknownMethod(name.to_owned()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.counters.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn StreakCounter> {
        self.counters.values().map(Box::as_ref)
    }
}

impl Default for CounterRegistry {
    fn default() -> Self {
        Self::with_defaults(DEFAULT_ENUMERATION_LIMIT)
    }
}
