//! Independent checks on the exact model: exhaustive enumeration, seeded
//! Monte Carlo sampling, and a sweep that compares two counting methods.

pub mod enumerate;
pub mod monte_carlo;
pub mod verify;

pub use enumerate::{enumerate_exact, Combinations, DEFAULT_ENUMERATION_LIMIT};
pub use monte_carlo::{monte_carlo, DrawSampler, MonteCarloEstimate};
pub use verify::{verify_configs, Mismatch, MismatchField, VerifyReport};

/// Adjacent pairs in a strictly increasing slice.
#[inline]
pub(crate) fn adjacent_pairs(sorted: &[u32]) -> usize {
    sorted.windows(2).filter(|w| w[1] == w[0] + 1).count()
}
