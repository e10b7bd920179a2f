use serde::{Deserialize, Serialize};

use crate::config::LotteryConfig;
use crate::counting::StreakCounter;
use crate::error::Result;
use crate::model::StreakCounts;

/// Which field of [`StreakCounts`] disagreed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchField {
    Total,
    WithConsecutive,
    Category(usize),
}

impl std::fmt::Display for MismatchField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MismatchField::Total => f.write_str("total"),
            MismatchField::WithConsecutive => f.write_str("with_consecutive"),
            MismatchField::Category(k) => write!(f, "category {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub pool_size: u32,
    pub draw_size: u32,
    pub field: MismatchField,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub candidate: String,
    pub oracle: String,
    pub max_pool: u32,
    pub configurations: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn diff(expected: &StreakCounts, actual: &StreakCounts) -> Vec<Mismatch> {
    let config = expected.config;
    let mut out = Vec::new();
    let mut check = |field, e: String, a: String| {
        if e != a {
            out.push(Mismatch {
                pool_size: config.pool_size(),
                draw_size: config.draw_size(),
                field,
                expected: e,
                actual: a,
            });
        }
    };
    check(
        MismatchField::Total,
        expected.total.to_string(),
        actual.total.to_string(),
    );
    check(
        MismatchField::WithConsecutive,
        expected.with_consecutive.to_string(),
        actual.with_consecutive.to_string(),
    );
    let categories = expected.by_category.len().max(actual.by_category.len());
    for k in 0..categories {
        check(
            MismatchField::Category(k),
            expected.category(k).to_string(),
            actual.category(k).to_string(),
        );
    }
    out
}

/// Runs `candidate` and `oracle` on every configuration with
/// `pool_size <= max_pool` and lists every disagreeing field.
pub fn verify_configs(
    candidate: &dyn StreakCounter,
    oracle: &dyn StreakCounter,
    max_pool: u32,
) -> Result<VerifyReport> {
    let mut configurations = 0;
    let mut mismatches = Vec::new();
    for config in LotteryConfig::all_up_to(max_pool) {
        configurations += 1;
        let expected = oracle.count(config)?;
        let actual = candidate.count(config)?;
        mismatches.extend(diff(&expected, &actual));
    }
    Ok(VerifyReport {
        candidate: candidate.name().to_owned(),
        oracle: oracle.name().to_owned(),
        max_pool,
        configurations,
        mismatches,
    })
}
