mod common;

use bscrel::info::Channel;
use bscrel::lab::{exact_error_probability, kounias_bound, BinaryCode, SubsetRule, TiePolicy};
use common::{check_code, random_code, HierarchyStats, SLACK};
use proptest::prelude::*;

#[test]
fn bounds_are_ordered_on_seeded_codes() {
    let mut stats = HierarchyStats::default();
    for t in 0..150 {
        check_code(&random_code(t), &mut stats);
    }
    assert!(stats.worst_slack >= -SLACK, "{stats:?}");
    assert!(stats.two_word_cases > 0 && stats.two_word_spread <= SLACK, "{stats:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kounias_order_never_breaks_the_bound(
        n in 4usize..=10,
        raw in proptest::collection::hash_set(0u64..1024, 3..12),
        perm_seed in any::<u64>(),
        p in 0.02f64..0.3,
    ) {
        let words: Vec<u64> = raw.into_iter().map(|w| w & ((1 << n) - 1)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        prop_assume!(words.len() >= 3);
        let code = BinaryCode::new(n, words).unwrap();
        let ch = Channel::new(p).unwrap();
        let exact = exact_error_probability(&code, &ch, TiePolicy::Adversarial).unwrap().per_codeword[0];
        let mut order: Vec<usize> = (1..code.len()).collect();
        let mut s = perm_seed;
        for k in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(k, (s >> 33) as usize % (k + 1));
        }
        let permuted = kounias_bound(&code, 0, &ch, SubsetRule::FullHalfspace, Some(&order)).unwrap();
        let default = kounias_bound(&code, 0, &ch, SubsetRule::FullHalfspace, None).unwrap();
        prop_assert!(permuted <= exact + 1e-12);
        prop_assert!((permuted - default).abs() <= 1e-12);
    }

    #[test]
    fn tie_policies_are_ordered(
        n in 3usize..=10,
        raw in proptest::collection::hash_set(0u64..1024, 2..10),
        p in 0.01f64..0.45,
    ) {
        let words: Vec<u64> = raw.into_iter().map(|w| w & ((1 << n) - 1)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        prop_assume!(words.len() >= 2);
        let code = BinaryCode::new(n, words).unwrap();
        let ch = Channel::new(p).unwrap();
        let fav = exact_error_probability(&code, &ch, TiePolicy::FavorTransmitted).unwrap().average;
        let split = exact_error_probability(&code, &ch, TiePolicy::RandomSplit).unwrap().average;
        let adv = exact_error_probability(&code, &ch, TiePolicy::Adversarial).unwrap().average;
        prop_assert!(fav <= split + 1e-15 && split <= adv + 1e-15);
    }
}
