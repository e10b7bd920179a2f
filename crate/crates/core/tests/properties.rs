use chrono::NaiveDate;
use consec_core::oracle::{enumerate_exact, DEFAULT_ENUMERATION_LIMIT};
use consec_core::{
    adjacent_pair_count, classify_history, draw_to_gaps, gaps_to_draw, model::streak_counts, Draw,
    DrawHistory, LotteryConfig,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn config_and_draw() -> impl Strategy<Value = (LotteryConfig, Vec<u32>)> {
    (1u32..=120)
        .prop_flat_map(|pool| (Just(pool), 1..=pool.min(30)))
        .prop_flat_map(|(pool, draw)| {
            (
                Just(LotteryConfig::new(pool, draw).unwrap()),
                subsequence((1..=pool).collect::<Vec<_>>(), draw as usize),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn gap_round_trip((config, numbers) in config_and_draw()) {
        let gaps = draw_to_gaps(config, &numbers).unwrap();
        prop_assert_eq!(gaps.gaps().len(), numbers.len() + 1);
        let sum: u32 = gaps.gaps().iter().sum();
        prop_assert_eq!(sum, config.pool_size() - config.draw_size());
        prop_assert_eq!(gaps_to_draw(config, &gaps).unwrap(), numbers);
    }

    #[test]
    fn pairs_are_zero_interior_gaps((config, numbers) in config_and_draw()) {
        let gaps = draw_to_gaps(config, &numbers).unwrap();
        let draw = Draw::new(config, NaiveDate::MIN, numbers).unwrap();
        prop_assert_eq!(adjacent_pair_count(&draw), gaps.zero_interior_gaps());
    }
}

proptest! {
    #[test]
    fn classification_conserves_draws(
        draws in prop::collection::vec(subsequence((1u32..=20).collect::<Vec<_>>(), 5), 0..60)
    ) {
        let config = LotteryConfig::new(20, 5).unwrap();
        let mut history = DrawHistory::new(config);
        for numbers in draws {
            history.draws.push(Draw::new(config, NaiveDate::MIN, numbers).unwrap());
        }
        let counts = classify_history(&history);
        prop_assert_eq!(counts.len(), 5);
        prop_assert_eq!(counts.iter().sum::<u64>(), history.len() as u64);
    }
}

#[test]
fn enumeration_matches_model_up_to_twenty() {
    for config in LotteryConfig::all_up_to(20) {
        let enumerated = enumerate_exact(config, DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(enumerated, streak_counts(config), "{config}");
    }
}
