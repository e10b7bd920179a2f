//! Observed category counts against the exact binomial occurrence model.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::config::LotteryConfig;
use crate::error::{Error, Result};
use crate::model::{streak_counts, CategorySelector, OccurrenceModel, StreakCounts};

/// Bins whose expected count falls below this are pooled.
pub const MIN_EXPECTED_PER_BIN: f64 = 5.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryComparison {
    pub selector: CategorySelector,
    pub observed: u64,
    /// Success probability as a reduced fraction, e.g. `363257/1220813`.
    pub probability: String,
    pub probability_value: f64,
    pub expected_mean: f64,
    pub expected_std_dev: f64,
    pub rounded_mean: i64,
    pub rounded_std_dev: i64,
    /// `None` when the expected spread is zero.
    pub z_score: Option<f64>,
}

impl CategoryComparison {
    fn new(model: &OccurrenceModel, observed: u64) -> Self {
        let p = &model.success_probability;
        CategoryComparison {
            selector: model.selector,
            observed,
            probability: format!("{}/{}", p.reduced_numerator, p.reduced_denominator),
            probability_value: p.value,
            expected_mean: model.mean,
            expected_std_dev: model.std_dev,
            rounded_mean: model.rounded_mean(),
            rounded_std_dev: model.rounded_std_dev(),
            z_score: model.z_score(observed),
        }
    }
}

/// A chi-square bin made of one or more adjacent categories.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PooledBin {
    pub categories: Vec<u32>,
    pub observed: u64,
    pub expected: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiSquareSummary {
    /// `None` when fewer than two bins survive pooling.
    pub statistic: Option<f64>,
    pub degrees_of_freedom: usize,
    pub p_value: Option<f64>,
    pub bins: Vec<PooledBin>,
    pub pooling_note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub config: LotteryConfig,
    pub trials: u64,
    /// One entry per category `0..draw_size`.
    pub per_category: Vec<CategoryComparison>,
    pub overall: CategoryComparison,
    pub chi_square: ChiSquareSummary,
}

impl ComparisonReport {
    pub fn observed_frequency(&self) -> f64 {
        self.overall.observed as f64 / self.trials as f64
    }
}

/// Builds the full observed vector from published aggregates: counts for
/// categories `1..draw_size` plus the total number of draws.
pub fn observed_from_aggregates(
    config: LotteryConfig,
    with_pairs: &[u64],
    trials: u64,
) -> Result<Vec<u64>> {
    let expected = config.category_count() - 1;
    if with_pairs.len() != expected {
        return Err(Error::ObservedShape {
            got: with_pairs.len(),
            expected,
        });
    }
    let paired: u64 = with_pairs.iter().sum();
    let none = trials.checked_sub(paired).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "category counts sum to {paired}, more than {trials} draws"
        ))
    })?;
    Ok(std::iter::once(none)
        .chain(with_pairs.iter().copied())
        .collect())
}

/// Compares `observed` (indexed by category `0..draw_size`) with the model at
/// `M = sum(observed)` trials.
pub fn compare(observed: &[u64], config: LotteryConfig) -> Result<ComparisonReport> {
    compare_with_counts(observed, &streak_counts(config))
}

pub fn compare_with_counts(observed: &[u64], counts: &StreakCounts) -> Result<ComparisonReport> {
    let config = counts.config;
    if observed.len() != config.category_count() {
        return Err(Error::ObservedShape {
            got: observed.len(),
            expected: config.category_count(),
        });
    }
    let trials: u64 = observed.iter().sum();
    if trials == 0 {
        return Err(Error::EmptyObservations);
    }

    let per_category: Vec<CategoryComparison> = observed
        .iter()
        .enumerate()
        .map(|(k, &o)| {
            let model =
                OccurrenceModel::from_counts(counts, trials, CategorySelector::Exactly(k as u32))?;
            Ok(CategoryComparison::new(&model, o))
        })
        .collect::<Result<_>>()?;
    let any = OccurrenceModel::from_counts(counts, trials, CategorySelector::Any)?;
    let overall = CategoryComparison::new(&any, observed[1..].iter().sum());

    let bins = per_category
        .iter()
        .enumerate()
        .map(|(k, c)| PooledBin {
            categories: vec![k as u32],
            observed: c.observed,
            expected: c.expected_mean,
        })
        .collect();
    let chi_square = chi_square(bins);

    Ok(ComparisonReport {
        config,
        trials,
        per_category,
        overall,
        chi_square,
    })
}

fn merge(into: &mut PooledBin, from: PooledBin) {
    into.categories.extend(from.categories);
    into.categories.sort_unstable();
    into.observed += from.observed;
    into.expected += from.expected;
}

/// Pools sparse bins, then computes the Pearson statistic.
///
/// Bins are scanned from the highest category down and any bin with expected
/// count under [`MIN_EXPECTED_PER_BIN`] is merged into the next lower one. If
/// the lowest bin is still sparse it merges upward.
fn chi_square(mut bins: Vec<PooledBin>) -> ChiSquareSummary {
    let mut i = bins.len() - 1;
    while i > 0 {
        if bins[i].expected < MIN_EXPECTED_PER_BIN {
            let sparse = bins.remove(i);
            merge(&mut bins[i - 1], sparse);
        }
        i -= 1;
    }
    if bins.len() > 1 && bins[0].expected < MIN_EXPECTED_PER_BIN {
        let sparse = bins.remove(0);
        merge(&mut bins[0], sparse);
    }

    let pooled: Vec<String> = bins
        .iter()
        .filter(|b| b.categories.len() > 1)
        .map(|b| {
            format!(
                "{}-{}",
                b.categories[0],
                b.categories[b.categories.len() - 1]
            )
        })
        .collect();
    let pooling_note = if pooled.is_empty() {
        "no pooling".to_owned()
    } else {
        format!(
            "pooled categories {} (expected < {MIN_EXPECTED_PER_BIN})",
            pooled.join(", ")
        )
    };

    let usable = bins.len() > 1 && bins.iter().all(|b| b.expected > 0.0);
    if !usable {
        return ChiSquareSummary {
            statistic: None,
            degrees_of_freedom: 0,
            p_value: None,
            bins,
            pooling_note,
        };
    }
    let statistic: f64 = bins
        .iter()
        .map(|b| {
            let d = b.observed as f64 - b.expected;
            d * d / b.expected
        })
        .sum();
    let degrees_of_freedom = bins.len() - 1;
    let p_value = ChiSquared::new(degrees_of_freedom as f64)
        .ok()
        .map(|dist| dist.sf(statistic));
    ChiSquareSummary {
        statistic: Some(statistic),
        degrees_of_freedom,
        p_value,
        bins,
        pooling_note,
    }
}
