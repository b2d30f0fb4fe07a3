//! Shared pieces of the integration and acceptance suites.

use bscrel::info::Channel;
use bscrel::lab::{
    cohen_merhav_bound, kounias_bound, local_distance_distribution, union_bound, BinaryCode, ErrorCensus, PairRule,
    SubsetRule, TiePolicy, Weight,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const HIERARCHY_P: [f64; 3] = [0.05, 0.1, 0.2];
pub const SLACK: f64 = 1e-12;

/// Random nonlinear code with `n <= 14`, `M <= 32`; every tenth has `M = 2`.
pub fn random_code(index: u64) -> BinaryCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + index);
    let n = rng.random_range(2..=14usize);
    let max_m = 32.min(1usize << n);
    let m = if index.is_multiple_of(10) { 2 } else { rng.random_range(2..=max_m) };
    let mut words: Vec<u64> = Vec::with_capacity(m);
    while words.len() < m {
        let w = rng.random::<u64>() & ((1u64 << n) - 1);
        if !words.contains(&w) {
            words.push(w);
        }
    }
    BinaryCode::new(n, words).unwrap()
}

#[derive(Debug, Default, Clone, Copy)]
pub struct HierarchyStats {
    pub cases: usize,
    /// Smallest of `exact - kounias`, `min(1, union) - exact`, `exact - cohen_merhav`.
    pub worst_slack: f64,
    pub two_word_cases: usize,
    /// Largest relative spread among union, Kounias and exact for `M = 2`.
    pub two_word_spread: f64,
}

/// Checks the bound ordering for one code at every `p` of [`HIERARCHY_P`].
pub fn check_code(code: &BinaryCode, stats: &mut HierarchyStats) {
    let census = ErrorCensus::new(code).unwrap();
    for p in HIERARCHY_P {
        let ch = Channel::new(p).unwrap();
        let exact = census.evaluate(&ch, TiePolicy::Adversarial);
        for i in 0..code.len() {
            let e = exact.per_codeword[i];
            let union = union_bound(code, i, &ch, TiePolicy::Adversarial).unwrap();
            let kounias = kounias_bound(code, i, &ch, SubsetRule::FullHalfspace, None).unwrap();
            let spectrum = local_distance_distribution(code, i).unwrap();
            let w = (1..spectrum.len()).find(|&w| spectrum[w] > 0).unwrap();
            let mut cm = 0.0f64;
            for weight in [Weight::Constant, Weight::Geometric(0.5)] {
                let v = cohen_merhav_bound(code, i, &ch, w, |u| weight.eval(u), PairRule::MaxIntersection).unwrap();
                cm = cm.max(v.value);
            }
            let slack = (e - kounias).min(union.min(1.0) - e).min(e - cm);
            if stats.cases == 0 || slack < stats.worst_slack {
                stats.worst_slack = slack;
            }
            stats.cases += 1;
            if code.len() == 2 {
                let spread = (union - e).abs().max((kounias - e).abs()) / e;
                stats.two_word_spread = stats.two_word_spread.max(spread);
                stats.two_word_cases += 1;
            }
        }
    }
}
