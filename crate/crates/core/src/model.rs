//! Exact streak statistics for a lottery configuration.
//!
//! Category `k` holds the draws with exactly `k` adjacent pairs, i.e. exactly
//! `k` zero interior gaps. A run of `r` consecutive numbers contributes
//! `r - 1` pairs, so `{1, 3, 13, 14, 15, 87}` falls in category 2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::LotteryConfig;
use crate::error::{Error, Result};
use crate::exact::{binomial, composition_count, ln_natural, Natural};

/// Exact draw counts for one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreakCounts {
    pub config: LotteryConfig,
    /// All draws, `C(pool, draw)`.
    #[serde(with = "crate::serde_nat")]
    pub total: Natural,
    /// Draws with at least one adjacent pair.
    #[serde(with = "crate::serde_nat")]
    pub with_consecutive: Natural,
    /// Draw counts indexed by adjacent-pair count `0..draw_size`.
    #[serde(with = "crate::serde_nat::vec")]
    pub by_category: Vec<Natural>,
}

impl StreakCounts {
    /// Derives `total` and `with_consecutive` from per-category counts.
    pub fn from_categories(config: LotteryConfig, by_category: Vec<Natural>) -> Self {
        debug_assert_eq!(by_category.len(), config.category_count());
        let with_consecutive: Natural = by_category.iter().skip(1).sum();
        let total = &with_consecutive + &by_category[0];
        StreakCounts {
            config,
            total,
            with_consecutive,
            by_category,
        }
    }

    /// Count for category `k`; zero past the last category.
    pub fn category(&self, k: usize) -> Natural {
        self.by_category.get(k).cloned().unwrap_or_default()
    }

    pub fn without_consecutive(&self) -> &Natural {
        &self.by_category[0]
    }

    /// `with_consecutive / total` as an exact fraction and a float.
    pub fn consecutive_probability(&self) -> Probability {
        Probability::new(self.with_consecutive.clone(), self.total.clone())
    }

    /// Probability of landing in category `k`.
    pub fn category_probability(&self, k: usize) -> Probability {
        Probability::new(self.category(k), self.total.clone())
    }
}

/// An exact probability `favourable / possible`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Probability {
    #[serde(with = "crate::serde_nat")]
    pub favourable: Natural,
    #[serde(with = "crate::serde_nat")]
    pub possible: Natural,
    /// Lowest-terms numerator and denominator.
    #[serde(with = "crate::serde_nat")]
    pub reduced_numerator: Natural,
    #[serde(with = "crate::serde_nat")]
    pub reduced_denominator: Natural,
    pub value: f64,
}

impl Probability {
    pub fn new(favourable: Natural, possible: Natural) -> Self {
        let ratio = ratio_of(&favourable, &possible);
        let value = ratio.to_f64().unwrap_or(f64::NAN);
        let reduced_numerator = ratio.numer().to_biguint().expect("non-negative");
        let reduced_denominator = ratio.denom().to_biguint().expect("positive");
        Probability {
            favourable,
            possible,
            reduced_numerator,
            reduced_denominator,
            value,
        }
    }

    pub fn as_ratio(&self) -> BigRational {
        ratio_of(&self.reduced_numerator, &self.reduced_denominator)
    }

    pub fn is_one(&self) -> bool {
        self.favourable == self.possible
    }
}

fn ratio_of(numerator: &Natural, denominator: &Natural) -> BigRational {
    BigRational::new(
        BigInt::from(numerator.clone()),
        BigInt::from(denominator.clone()),
    )
}

/// Exact number of draws with exactly `k` adjacent pairs.
///
/// Choose which `k` of the `draw_size - 1` interior gaps are zero; the other
/// interior gaps are `>= 1` and the two end gaps are `>= 0`, all summing to
/// `pool_size - draw_size`.
pub fn category_count(config: LotteryConfig, k: u32) -> Result<Natural> {
    let interior = config.interior_gaps();
    if k > interior {
        return Err(Error::CategoryOutOfRange {
            category: k,
            draw_size: config.draw_size(),
        });
    }
    let placements = binomial(u64::from(interior), u64::from(k));
    let fillings = composition_count(u64::from(config.gap_total()), 2, u64::from(interior - k));
    Ok(placements * fillings)
}

/// All category counts via the stars-and-bars closed form.
pub fn streak_counts(config: LotteryConfig) -> StreakCounts {
    let by_category = (0..config.draw_size())
        .map(|k| category_count(config, k).expect("k within interior gaps"))
        .collect();
    let counts = StreakCounts::from_categories(config, by_category);
    debug_assert_eq!(
        counts.total,
        binomial(u64::from(config.pool_size()), u64::from(config.draw_size()))
    );
    counts
}

pub fn consecutive_probability(config: LotteryConfig) -> Probability {
    streak_counts(config).consecutive_probability()
}

/// Smallest draw size that forces an adjacent pair.
///
/// At most `ceil(N / 2)` numbers avoid each other's neighbours, so one more
/// guarantees a pair: `(N + 2) / 2` for even `N`, `(N + 3) / 2` for odd `N`.
/// For `N = 1` the result exceeds the pool, meaning no draw size is certain.
pub fn certainty_threshold(pool_size: u32) -> u32 {
    if pool_size.is_multiple_of(2) {
        (pool_size + 2) / 2
    } else {
        (pool_size + 3) / 2
    }
}

/// Which draws count as a success in the occurrence model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CategorySelector {
    /// At least one adjacent pair.
    Any,
    /// Exactly `k` adjacent pairs.
    Exactly(u32),
}

impl std::fmt::Display for CategorySelector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CategorySelector::Any => f.write_str("any"),
            CategorySelector::Exactly(k) => write!(f, "{k}"),
        }
    }
}

/// Binomial model for the number of successes over `trials` draws.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OccurrenceModel {
    pub selector: CategorySelector,
    pub success_probability: Probability,
    pub trials: u64,
    pub mean: f64,
    pub std_dev: f64,
}

impl OccurrenceModel {
    pub fn from_counts(
        counts: &StreakCounts,
        trials: u64,
        selector: CategorySelector,
    ) -> Result<Self> {
        let success_probability = match selector {
            CategorySelector::Any => counts.consecutive_probability(),
            CategorySelector::Exactly(k) => {
                if k >= counts.config.draw_size() {
                    return Err(Error::CategoryOutOfRange {
                        category: k,
                        draw_size: counts.config.draw_size(),
                    });
                }
                counts.category_probability(k as usize)
            }
        };
        let p = success_probability.as_ratio();
        let m = BigRational::from_integer(BigInt::from(trials));
        let mean = &m * &p;
        let variance = &mean * (BigRational::one() - &p);
        Ok(OccurrenceModel {
            selector,
            mean: mean.to_f64().unwrap_or(f64::NAN),
            std_dev: variance.to_f64().unwrap_or(f64::NAN).sqrt(),
            success_probability,
            trials,
        })
    }

    /// Mean rounded to the nearest integer.
    pub fn rounded_mean(&self) -> i64 {
        self.mean.round() as i64
    }

    pub fn rounded_std_dev(&self) -> i64 {
        self.std_dev.round() as i64
    }

    /// `(observed - mean) / std_dev`, or `None` when the spread is zero.
    pub fn z_score(&self, observed: u64) -> Option<f64> {
        (self.std_dev > 0.0).then(|| (observed as f64 - self.mean) / self.std_dev)
    }

    /// Binomial point probability of exactly `successes` successes.
    pub fn point_probability(&self, successes: u64) -> f64 {
        binomial_pmf(&self.success_probability, successes, self.trials)
    }
}

pub fn occurrence_model(
    config: LotteryConfig,
    trials: u64,
    selector: CategorySelector,
) -> Result<OccurrenceModel> {
    OccurrenceModel::from_counts(&streak_counts(config), trials, selector)
}

/// Probability that exactly `successes` of `trials` draws contain an adjacent
/// pair.
pub fn occurrence_probability(config: LotteryConfig, successes: u64, trials: u64) -> Result<f64> {
    if successes > trials {
        return Err(Error::InvalidArgument(format!(
            "successes {successes} exceed trials {trials}"
        )));
    }
    Ok(binomial_pmf(
        &consecutive_probability(config),
        successes,
        trials,
    ))
}

/// `C(M, s) p^s (1 - p)^(M - s)`, evaluated in log space so large `M` does
/// not overflow.
fn binomial_pmf(p: &Probability, successes: u64, trials: u64) -> f64 {
    if successes > trials {
        return 0.0;
    }
    let failures = trials - successes;
    if p.favourable.is_zero() {
        return if successes == 0 { 1.0 } else { 0.0 };
    }
    if p.is_one() {
        return if failures == 0 { 1.0 } else { 0.0 };
    }
    let ln_p = ln_natural(&p.favourable) - ln_natural(&p.possible);
    let ln_q = ln_natural(&(&p.possible - &p.favourable)) - ln_natural(&p.possible);
    let ln_choose = ln_natural(&binomial(trials, successes));
    (ln_choose + successes as f64 * ln_p + failures as f64 * ln_q).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn cfg(pool: u32, draw: u32) -> LotteryConfig {
        LotteryConfig::new(pool, draw).unwrap()
    }

    /// Exhaustive categorisation by recursion over all subsets; kept separate
    /// from the oracle module so the model tests stand alone.
    fn brute_categories(pool: u32, draw: u32) -> Vec<u64> {
        let mut counts = vec![0u64; draw as usize];
        let mut current = Vec::new();
        fn walk(start: u32, pool: u32, draw: u32, current: &mut Vec<u32>, counts: &mut [u64]) {
            if current.len() == draw as usize {
                let pairs = current.windows(2).filter(|w| w[1] == w[0] + 1).count();
                counts[pairs] += 1;
                return;
            }
            for n in start..=pool {
                current.push(n);
                walk(n + 1, pool, draw, current, counts);
                current.pop();
            }
        }
        walk(1, pool, draw, &mut current, &mut counts);
        counts
    }

    #[test]
    fn superenalotto_categories() {
        let c = LotteryConfig::SUPERENALOTTO;
        let expected = [437_353_560u64, 164_007_585, 20_247_850, 987_700, 17_850, 85];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(category_count(c, k as u32).unwrap(), nat(e), "k={k}");
        }
        assert!(category_count(c, 6).is_err());
    }

    #[test]
    fn superenalotto_totals() {
        let counts = streak_counts(LotteryConfig::SUPERENALOTTO);
        assert_eq!(counts.total, nat(622_614_630));
        assert_eq!(counts.with_consecutive, nat(185_261_070));
        assert_eq!(&counts.total - &counts.with_consecutive, binomial(85, 6));
    }

    #[test]
    fn small_configs() {
        let counts = streak_counts(cfg(10, 3));
        assert_eq!(counts.total, nat(120));
        assert_eq!(counts.with_consecutive, nat(64));
        assert_eq!(brute_categories(10, 3), vec![56, 56, 8]);

        let counts = streak_counts(cfg(2, 2));
        assert_eq!(counts.total, nat(1));
        assert_eq!(counts.with_consecutive, nat(1));
    }

    #[test]
    fn categories_match_brute_force_up_to_twenty() {
        for config in LotteryConfig::all_up_to(20) {
            let counts = streak_counts(config);
            let brute = brute_categories(config.pool_size(), config.draw_size());
            let expected: Vec<Natural> = brute.into_iter().map(Natural::from).collect();
            assert_eq!(counts.by_category, expected, "{config}");
            assert_eq!(
                counts.total,
                binomial(config.pool_size().into(), config.draw_size().into())
            );
            assert_eq!(
                counts.by_category[0],
                binomial(
                    u64::from(config.pool_size() - config.draw_size() + 1),
                    config.draw_size().into()
                )
            );
        }
    }

    #[test]
    fn probabilities() {
        let p = consecutive_probability(LotteryConfig::SUPERENALOTTO);
        assert_eq!(p.favourable, nat(185_261_070));
        assert_eq!(p.possible, nat(622_614_630));
        assert_eq!(p.reduced_numerator, nat(363_257));
        assert_eq!(p.reduced_denominator, nat(1_220_813));
        assert!((p.value - 0.297_553_351_741_831).abs() < 1e-15);

        assert!(consecutive_probability(cfg(2, 2)).is_one());
        let p = consecutive_probability(cfg(10, 3));
        assert_eq!(p.reduced_numerator, nat(8));
        assert_eq!(p.reduced_denominator, nat(15));
    }

    #[test]
    fn degenerate_configs() {
        for pool in 2..=12 {
            assert!(consecutive_probability(cfg(pool, pool)).is_one());
            assert!(consecutive_probability(cfg(pool, 1)).favourable.is_zero());
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(certainty_threshold(90), 46);
        assert_eq!(certainty_threshold(4), 3);
        assert_eq!(certainty_threshold(3), 3);
        assert_eq!(certainty_threshold(2), 2);
    }

    #[test]
    fn threshold_is_exact_and_probability_monotone() {
        for pool in 1..=16u32 {
            let mut previous = BigRational::zero();
            for draw in 1..=pool {
                let p = consecutive_probability(cfg(pool, draw));
                assert_eq!(
                    p.is_one(),
                    draw >= certainty_threshold(pool),
                    "pool={pool} draw={draw}"
                );
                let ratio = p.as_ratio();
                assert!(ratio >= previous, "pool={pool} draw={draw}");
                previous = ratio;
            }
        }
    }

    #[test]
    fn occurrence_at_1507() {
        let c = LotteryConfig::SUPERENALOTTO;
        let all = occurrence_model(c, 1507, CategorySelector::Any).unwrap();
        assert_eq!(all.rounded_mean(), 448);
        assert_eq!(all.rounded_std_dev(), 18);
        let one = occurrence_model(c, 1507, CategorySelector::Exactly(1)).unwrap();
        assert_eq!((one.rounded_mean(), one.rounded_std_dev()), (397, 17));
        let empty = occurrence_model(c, 0, CategorySelector::Any).unwrap();
        assert_eq!((empty.mean, empty.std_dev), (0.0, 0.0));
        assert_eq!(empty.z_score(0), None);
        assert!(occurrence_model(c, 10, CategorySelector::Exactly(6)).is_err());
    }

    #[test]
    fn occurrence_moments_match_formula() {
        let m =
            occurrence_model(LotteryConfig::SUPERENALOTTO, 1507, CategorySelector::Any).unwrap();
        let p = 185_261_070f64 / 622_614_630f64;
        let mean = 1507.0 * p;
        let sd = (1507.0 * p * (1.0 - p)).sqrt();
        assert!((m.mean - mean).abs() <= 4.0 * f64::EPSILON * mean);
        assert!((m.std_dev - sd).abs() <= 4.0 * f64::EPSILON * sd);
    }

    #[test]
    fn point_probabilities() {
        let c = LotteryConfig::SUPERENALOTTO;
        assert_eq!(occurrence_probability(c, 0, 0).unwrap(), 1.0);
        let one = occurrence_probability(c, 1, 1).unwrap();
        assert!((one - 185_261_070f64 / 622_614_630f64).abs() < 1e-12);
        let sq = occurrence_probability(cfg(10, 3), 2, 2).unwrap();
        assert!((sq - (64f64 / 120.0).powi(2)).abs() < 1e-12);
        assert!(occurrence_probability(c, 3, 2).is_err());
    }

    #[test]
    fn point_probabilities_sum_to_one() {
        for config in [LotteryConfig::SUPERENALOTTO, cfg(10, 3), cfg(7, 2)] {
            for trials in [1u64, 2, 17, 100, 200] {
                let total: f64 = (0..=trials)
                    .map(|s| occurrence_probability(config, s, trials).unwrap())
                    .sum();
                assert!(
                    (total - 1.0).abs() < 1e-9,
                    "{config} trials={trials}: {total}"
                );
            }
        }
        // certain and impossible successes
        let sure = occurrence_probability(cfg(2, 2), 5, 5).unwrap();
        assert_eq!(sure, 1.0);
        let never = occurrence_probability(cfg(9, 1), 0, 5).unwrap();
        assert_eq!(never, 1.0);
    }
}
