//! Exact consecutive-number statistics for k-of-N lottery draws.
//!
//! A draw of `n` distinct numbers from `1..=N` is classified by how many
//! adjacent pairs it contains. [`model`] counts each class exactly,
//! [`counting`] exposes interchangeable counting methods behind a registry,
//! [`oracle`] checks them by enumeration and simulation, and [`compare`]
//! audits observed draw histories against the exact model.

pub mod compare;
pub mod config;
pub mod counting;
pub mod decimal;
pub mod error;
pub mod exact;
pub mod fixture;
pub mod gaps;
pub mod history;
pub mod model;
pub mod oracle;
mod serde_nat;

pub use compare::{compare, observed_from_aggregates, ComparisonReport};
pub use config::LotteryConfig;
pub use counting::{ClosedForm, CounterRegistry, Enumeration, GeneratingFunction, StreakCounter};
pub use error::{Error, Result};
pub use exact::Natural;
pub use gaps::{draw_to_gaps, gaps_to_draw, GapDecomposition};
pub use history::{adjacent_pair_count, classify_history, parse_history, Draw, DrawHistory};
pub use model::{
    category_count, certainty_threshold, consecutive_probability, occurrence_model,
    occurrence_probability, CategorySelector, OccurrenceModel, Probability, StreakCounts,
};
