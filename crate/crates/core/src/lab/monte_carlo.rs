//! Seeded Monte Carlo estimate of the ML decoding error probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::Channel;
use crate::lab::code::{distance, BinaryCode};
use crate::lab::exact::TiePolicy;

/// Largest code the decoder searches exhaustively.
pub const MAX_MC_WORDS: usize = 1 << 20;
const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarlo {
    pub estimate: f64,
    /// Binomial standard error `sqrt(e(1-e)/trials)`.
    pub std_error: f64,
    pub trials: u64,
    pub errors: u64,
    pub seed: u64,
    pub tie_policy: TiePolicy,
}

/// Random codeword, BSC noise and a minimum-distance decode per trial.
///
/// Trial `t` draws from a ChaCha stream keyed by `(seed, t)`, so the result
/// does not depend on how trials are spread over threads.
pub fn monte_carlo_error(code: &BinaryCode, ch: &Channel, trials: u64, seed: u64, tie: TiePolicy) -> Result<MonteCarlo> {
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    if code.len() > MAX_MC_WORDS {
        return Err(Error::SizeGuard {
            what: "number of codewords M for simulation",
            value: code.len(),
            limit: MAX_MC_WORDS,
        });
    }
    if tie == TiePolicy::RandomSplit {
        return Err(Error::Config(
            "random-split tie handling splits probability mass and has no single-shot decoder".into(),
        ));
    }
    let n = code.n();
    let p = ch.p();
    let words = code.words();
    let chunks = trials.div_ceil(CHUNK);
    let errors: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let end = ((c + 1) * CHUNK).min(trials);
            let mut count = 0u64;
            for t in c * CHUNK..end {
                rng.set_stream(t);
                rng.set_word_pos(0);
                let i = rng.random_range(0..words.len());
                let mut noise = 0u64;
                for b in 0..n {
                    if rng.random::<f64>() < p {
                        noise |= 1 << b;
                    }
                }
                count += decode_fails(words, i, words[i] ^ noise, tie) as u64;
            }
            count
        })
        .sum();
    let estimate = errors as f64 / trials as f64;
    Ok(MonteCarlo {
        estimate,
        std_error: (estimate * (1.0 - estimate) / trials as f64).sqrt(),
        trials,
        errors,
        seed,
        tie_policy: tie,
    })
}

fn decode_fails(words: &[u64], i: usize, y: u64, tie: TiePolicy) -> bool {
    let di = distance(words[i], y);
    match tie {
        TiePolicy::FavorTransmitted => words.iter().any(|&x| distance(x, y) < di),
        TiePolicy::Adversarial => words
            .iter()
            .enumerate()
            .any(|(j, &x)| j != i && distance(x, y) <= di),
        _ => words
            .iter()
            .enumerate()
            .any(|(j, &x)| {
                let d = distance(x, y);
                d < di || (d == di && j < i)
            }),
    }
}
