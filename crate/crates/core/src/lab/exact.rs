//! Exact ML decoding error probabilities by enumeration of received words.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::Channel;
use crate::lab::code::{distance, BinaryCode};
use crate::numeric::{log2_binomial_row, log2_sum};

/// Largest block length enumerated exhaustively.
pub const MAX_EXACT_N: usize = 24;

/// How a received word at equal distance from several codewords is decoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TiePolicy {
    /// Ties resolve to the transmitted word.
    FavorTransmitted,
    /// Every tie is an error.
    Adversarial,
    /// Ties resolve to the tied word of lowest index.
    LowestIndex,
    /// Each tied word receives an equal share of the probability mass.
    RandomSplit,
}

impl TiePolicy {
    pub const ALL: [TiePolicy; 4] = [
        TiePolicy::FavorTransmitted,
        TiePolicy::Adversarial,
        TiePolicy::LowestIndex,
        TiePolicy::RandomSplit,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TiePolicy::FavorTransmitted => "favor-transmitted",
            TiePolicy::Adversarial => "adversarial",
            TiePolicy::LowestIndex => "lowest-index",
            TiePolicy::RandomSplit => "random-split",
        }
    }

    /// Error mass carried by a received word tied between two codewords.
    ///
    /// Under `LowestIndex` one of the two words wins every tie and the other
    /// loses every tie, so averaged over the pair the tie counts half.
    pub fn pairwise_tie_weight(&self) -> f64 {
        match self {
            TiePolicy::FavorTransmitted => 0.0,
            TiePolicy::Adversarial => 1.0,
            TiePolicy::LowestIndex | TiePolicy::RandomSplit => 0.5,
        }
    }

    fn index(&self) -> usize {
        match self {
            TiePolicy::FavorTransmitted => 0,
            TiePolicy::Adversarial => 1,
            TiePolicy::LowestIndex => 2,
            TiePolicy::RandomSplit => 3,
        }
    }
}

/// `log2 (p^d (1-p)^(n-d))`, exact at `p = 0`.
#[inline]
pub fn log2_bsc_weight(d: usize, n: usize, p: f64) -> f64 {
    let a = if d == 0 { 0.0 } else { d as f64 * p.log2() };
    let b = if d == n { 0.0 } else { (n - d) as f64 * (1.0 - p).log2() };
    a + b
}

/// `log2 pi(w)`: probability that `w` differing positions decode to the wrong word.
pub fn pairwise_pi_log2(w: usize, ch: &Channel, tie: TiePolicy) -> f64 {
    let p = ch.p();
    let row = log2_binomial_row(w);
    let mut terms: Vec<f64> = ((w / 2 + 1)..=w)
        .map(|t| row[t] + log2_bsc_weight(t, w, p))
        .collect();
    if w.is_multiple_of(2) {
        let weight = tie.pairwise_tie_weight();
        if weight > 0.0 {
            terms.push(weight.log2() + row[w / 2] + log2_bsc_weight(w / 2, w, p));
        }
    }
    log2_sum(terms)
}

/// Pairwise error probability `pi(w)` for two codewords at distance `w`.
pub fn pairwise_pi(w: usize, ch: &Channel, tie: TiePolicy) -> f64 {
    pairwise_pi_log2(w, ch, tie).exp2()
}

/// Received words decoded away from each codeword, grouped by error weight.
///
/// `count(policy, i, d)` is the number of received words at distance `d`
/// from `x_i` decoded elsewhere (fractional under `RandomSplit`). The census
/// depends only on the code, so it serves any crossover probability.
#[derive(Debug, Clone)]
pub struct ErrorCensus {
    n: usize,
    m: usize,
    counts: Vec<f64>,
}

impl ErrorCensus {
    pub fn new(code: &BinaryCode) -> Result<Self> {
        let n = code.n();
        if n > MAX_EXACT_N {
            return Err(Error::SizeGuard {
                what: "block length n for exact enumeration",
                value: n,
                limit: MAX_EXACT_N,
            });
        }
        let m = code.len();
        let words = code.words();
        let stride = n + 1;
        let mut counts = vec![0.0; 4 * m * stride];
        let mut dist = vec![0usize; m];
        for y in 0u64..(1u64 << n) {
            let mut best = usize::MAX;
            let mut ties = 0usize;
            let mut first = 0usize;
            for (j, &x) in words.iter().enumerate() {
                let d = distance(x, y);
                dist[j] = d;
                if d < best {
                    best = d;
                    ties = 1;
                    first = j;
                } else if d == best {
                    ties += 1;
                }
            }
            for (i, &d) in dist.iter().enumerate() {
                let base = i * stride + d;
                if d > best {
                    for pol in 0..4 {
                        counts[pol * m * stride + base] += 1.0;
                    }
                } else if ties > 1 {
                    counts[TiePolicy::Adversarial.index() * m * stride + base] += 1.0;
                    if i != first {
                        counts[TiePolicy::LowestIndex.index() * m * stride + base] += 1.0;
                    }
                    counts[TiePolicy::RandomSplit.index() * m * stride + base] += 1.0 - 1.0 / ties as f64;
                }
            }
        }
        Ok(ErrorCensus { n, m, counts })
    }

    pub fn count(&self, tie: TiePolicy, i: usize, d: usize) -> f64 {
        self.counts[(tie.index() * self.m + i) * (self.n + 1) + d]
    }

    /// `log2 P_e(x_i)`; `-inf` when no received word decodes away.
    pub fn log2_error(&self, i: usize, ch: &Channel, tie: TiePolicy) -> f64 {
        let p = ch.p();
        log2_sum((0..=self.n).filter_map(|d| {
            let c = self.count(tie, i, d);
            (c > 0.0).then(|| c.log2() + log2_bsc_weight(d, self.n, p))
        }))
    }

    pub fn evaluate(&self, ch: &Channel, tie: TiePolicy) -> ExactError {
        let log2_per_codeword: Vec<f64> = (0..self.m).map(|i| self.log2_error(i, ch, tie)).collect();
        let per_codeword: Vec<f64> = log2_per_codeword.iter().map(|l| l.exp2()).collect();
        let log2_average = log2_sum(log2_per_codeword.iter().copied()) - (self.m as f64).log2();
        ExactError {
            average: log2_average.exp2(),
            log2_average,
            per_codeword,
            log2_per_codeword,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactError {
    pub per_codeword: Vec<f64>,
    pub log2_per_codeword: Vec<f64>,
    /// `(1/M) sum_i P_e(x_i)`.
    pub average: f64,
    pub log2_average: f64,
}

/// Exact `P_e(x_i)` for every codeword and their average.
pub fn exact_error_probability(code: &BinaryCode, ch: &Channel, tie: TiePolicy) -> Result<ExactError> {
    Ok(ErrorCensus::new(code)?.evaluate(ch, tie))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::code::{load_code, random_linear_code};

    fn ch(p: f64) -> Channel {
        Channel::new(p).unwrap()
    }

    #[test]
    fn pairwise_small_cases() {
        let p = 0.13;
        for tie in TiePolicy::ALL {
            assert!((pairwise_pi(1, &ch(p), tie) - p).abs() < 1e-15);
        }
        let q = 1.0 - p;
        assert!((pairwise_pi(2, &ch(p), TiePolicy::Adversarial) - (p * p + 2.0 * p * q)).abs() < 1e-15);
        assert!((pairwise_pi(2, &ch(p), TiePolicy::FavorTransmitted) - p * p).abs() < 1e-15);
        assert!((pairwise_pi(2, &ch(p), TiePolicy::RandomSplit) - (p * p + p * q)).abs() < 1e-15);
        assert!((pairwise_pi(3, &ch(0.1), TiePolicy::Adversarial) - 0.028).abs() < 1e-15);
    }

    #[test]
    fn pairwise_exponent_converges() {
        let c = ch(0.08);
        let a1 = c.bhattacharyya();
        for &w in &[0.1, 0.3, 0.5] {
            let n = 1000usize;
            let l = pairwise_pi_log2((w * n as f64).round() as usize, &c, TiePolicy::Adversarial);
            assert!((l / n as f64 - w * a1).abs() <= 0.02, "omega {w}");
        }
    }

    #[test]
    fn repetition_code() {
        let code = load_code("000\n111").unwrap();
        for tie in TiePolicy::ALL {
            let e = exact_error_probability(&code, &ch(0.1), tie).unwrap();
            assert!((e.average - 0.028).abs() < 1e-15);
            assert!(e.per_codeword.iter().all(|&x| (x - 0.028).abs() < 1e-15));
        }
        let single = load_code("0101").unwrap();
        let e = exact_error_probability(&single, &ch(0.2), TiePolicy::Adversarial).unwrap();
        assert_eq!(e.average, 0.0);
        assert_eq!(e.log2_average, f64::NEG_INFINITY);
    }

    #[test]
    fn two_word_codes_reduce_to_pairwise() {
        let code = load_code("000000\n110110").unwrap();
        for tie in TiePolicy::ALL {
            let e = exact_error_probability(&code, &ch(0.2), tie).unwrap();
            assert!((e.average - pairwise_pi(4, &ch(0.2), tie)).abs() < 1e-15, "{tie:?}");
        }
        let e = exact_error_probability(&code, &ch(0.2), TiePolicy::Adversarial).unwrap();
        assert!((e.per_codeword[1] - pairwise_pi(4, &ch(0.2), TiePolicy::Adversarial)).abs() < 1e-15);
    }

    #[test]
    fn tie_policies_are_ordered_and_linear_codes_symmetric() {
        let code = random_linear_code(12, 5, 3).unwrap();
        let census = ErrorCensus::new(&code).unwrap();
        let c = ch(0.1);
        let fav = census.evaluate(&c, TiePolicy::FavorTransmitted);
        let split = census.evaluate(&c, TiePolicy::RandomSplit);
        let adv = census.evaluate(&c, TiePolicy::Adversarial);
        for i in 0..code.len() {
            assert!(fav.per_codeword[i] <= split.per_codeword[i] + 1e-15);
            assert!(split.per_codeword[i] <= adv.per_codeword[i] + 1e-15);
            assert!((adv.per_codeword[i] - adv.per_codeword[0]).abs() < 1e-12);
            assert!((split.per_codeword[i] - split.per_codeword[0]).abs() < 1e-12);
        }
    }

    #[test]
    fn small_p_stays_in_log_domain() {
        let code = random_linear_code(16, 4, 9).unwrap();
        let e = exact_error_probability(&code, &ch(1e-200), TiePolicy::Adversarial).unwrap();
        assert!(e.log2_average.is_finite());
        assert!(e.log2_average < -600.0);
        let big = load_code(&"0".repeat(25)).unwrap();
        assert!(matches!(
            exact_error_probability(&big, &ch(0.1), TiePolicy::Adversarial),
            Err(Error::SizeGuard { .. })
        ));
    }
}
