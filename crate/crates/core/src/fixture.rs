//! The forty SuperEnalotto draws of October to December 2009, plus the
//! published aggregate counts for the full 1997-2009 history.

use crate::config::LotteryConfig;
use crate::history::{parse_history_str, DrawHistory};

/// CSV text of the Table 1 draws, newest first.
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

/// First game of the lottery.
pub const GAME_START: &str = "1997-12-03";
/// First draw covered by the published aggregate counts. Differs from
/// [`GAME_START`] in the source; both are kept as reported.
pub const AGGREGATE_START: &str = "1997-12-07";
/// Draws covered by the published aggregates (through the end of 2009).
pub const AGGREGATE_TRIALS: u64 = 1507;
/// Published draw counts with exactly 1..=5 adjacent pairs.
pub const AGGREGATE_OBSERVED: [u64; 5] = [396, 53, 5, 0, 0];

/// Fixture names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &["table1"];

pub fn table1() -> DrawHistory {
    parse_history_str(TABLE1_CSV, LotteryConfig::SUPERENALOTTO).expect("embedded fixture is valid")
}

pub fn fixture(name: &str) -> Option<DrawHistory> {
    match name {
        "table1" => Some(table1()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::history::classify_history;

    #[test]
    fn table1_shape() {
        let h = table1();
        assert_eq!(h.len(), 40);
        assert_eq!(h.draws[0].numbers(), &[40, 41, 45, 51, 52, 79]);
        assert_eq!(h.draws[39].date.to_string(), "2009-10-01");
        let counts = classify_history(&h);
        assert_eq!(counts.iter().sum::<u64>(), 40);
        assert_eq!(counts[1..].iter().sum::<u64>(), 13);
    }

    #[test]
    fn aggregates_sum_to_454() {
        assert_eq!(AGGREGATE_OBSERVED.iter().sum::<u64>(), 454);
        assert!(fixture("table2").is_none());
    }
}
