//! Explicit binary codes of length at most 64, stored as bit masks.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest block length a word mask can hold.
pub const MAX_N: usize = 64;
/// Largest dimension whose codewords are listed explicitly.
pub const MAX_LINEAR_K: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CodeOrigin {
    Explicit,
    Linear {
        k: usize,
        generator: Vec<u64>,
        seed: Option<u64>,
    },
}

/// `M` distinct words of length `n`; bit `b` of a mask is coordinate `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    words: Vec<u64>,
    origin: CodeOrigin,
}

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn distance(a: u64, b: u64) -> usize {
    (a ^ b).count_ones() as usize
}

impl BinaryCode {
    /// Validates length, distinctness and non-emptiness.
    pub fn new(n: usize, words: Vec<u64>) -> Result<Self> {
        Self::with_origin(n, words, CodeOrigin::Explicit)
    }

    fn with_origin(n: usize, words: Vec<u64>, origin: CodeOrigin) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::SizeGuard {
                what: "block length n",
                value: n,
                limit: MAX_N,
            });
        }
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut seen = HashMap::with_capacity(words.len());
        for (idx, &w) in words.iter().enumerate() {
            if w & !mask(n) != 0 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("word has bits beyond length {n}"),
                });
            }
            if let Some(first) = seen.insert(w, idx) {
                return Err(Error::DuplicateWord {
                    line: idx + 1,
                    first: first + 1,
                });
            }
        }
        Ok(BinaryCode { n, words, origin })
    }

    /// Codewords given as 0/1 strings, first character is coordinate 0.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let text = rows.iter().map(|r| r.as_ref()).collect::<Vec<_>>().join("\n");
        load_code(&text)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords `M`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn word(&self, i: usize) -> Result<u64> {
        self.words.get(i).copied().ok_or(Error::BadIndex {
            index: i,
            size: self.words.len(),
        })
    }

    pub fn origin(&self) -> &CodeOrigin {
        &self.origin
    }

    /// `log2(M) / n`.
    pub fn rate(&self) -> f64 {
        (self.len() as f64).log2() / self.n as f64
    }

    /// True when the words form a group under addition.
    pub fn is_linear(&self) -> bool {
        let set: std::collections::HashSet<u64> = self.words.iter().copied().collect();
        set.contains(&0)
            && self.len().is_power_of_two()
            && self
                .words
                .iter()
                .all(|&a| self.words.iter().all(|&b| set.contains(&(a ^ b))))
    }

    /// Minimum distance, `None` for a single word.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best = None;
        for (a, &x) in self.words.iter().enumerate() {
            for &y in &self.words[a + 1..] {
                let d = distance(x, y);
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
        best
    }

    pub fn word_string(&self, i: usize) -> Result<String> {
        let w = self.word(i)?;
        Ok((0..self.n)
            .map(|b| if w >> b & 1 == 1 { '1' } else { '0' })
            .collect())
    }

    /// One word per line, in the format read by [`load_code`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.len() {
            out.push_str(&self.word_string(i).unwrap_or_default());
            out.push('\n');
        }
        out
    }
}

/// Parses one 0/1 word per line; blank lines and text after `#` are ignored.
pub fn load_code(text: &str) -> Result<BinaryCode> {
    let mut n = None;
    let mut words = Vec::new();
    let mut seen: HashMap<u64, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let len = body.chars().count();
        match n {
            None => {
                if len > MAX_N {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("word length {len} exceeds {MAX_N}"),
                    });
                }
                n = Some(len);
            }
            Some(m) if m != len => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("word has length {len}, expected {m}"),
                });
            }
            _ => {}
        }
        let mut w = 0u64;
        for (b, c) in body.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w |= 1 << b,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        if let Some(&first) = seen.get(&w) {
            return Err(Error::DuplicateWord {
                line: line_no,
                first,
            });
        }
        seen.insert(w, line_no);
        words.push(w);
    }
    match n {
        None => Err(Error::EmptyCode),
        Some(n) => BinaryCode::new(n, words),
    }
}

/// Span of `k` uniformly random generator rows of length `n`.
///
/// Dependent rows are kept in the recorded generator, so the code has
/// `2^rank` words.
pub fn random_linear_code(n: usize, k: usize, seed: u64) -> Result<BinaryCode> {
    if n == 0 || n > MAX_N {
        return Err(Error::SizeGuard {
            what: "block length n",
            value: n,
            limit: MAX_N,
        });
    }
    if k > n {
        return Err(Error::Config(format!("dimension k = {k} exceeds n = {n}")));
    }
    if k > MAX_LINEAR_K {
        return Err(Error::SizeGuard {
            what: "dimension k",
            value: k,
            limit: MAX_LINEAR_K,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generator: Vec<u64> = (0..k).map(|_| rng.random::<u64>() & mask(n)).collect();
    let words = span(&generator);
    BinaryCode::with_origin(
        n,
        words,
        CodeOrigin::Linear {
            k,
            generator,
            seed: Some(seed),
        },
    )
}

/// Linear code spanned by explicit generator rows.
pub fn linear_code(n: usize, generator: &[u64]) -> Result<BinaryCode> {
    if generator.len() > MAX_LINEAR_K {
        return Err(Error::SizeGuard {
            what: "dimension k",
            value: generator.len(),
            limit: MAX_LINEAR_K,
        });
    }
    if n == 0 || n > MAX_N || generator.iter().any(|&g| g & !mask(n) != 0) {
        return Err(Error::Config(format!("generator rows do not fit length {n}")));
    }
    BinaryCode::with_origin(
        n,
        span(generator),
        CodeOrigin::Linear {
            k: generator.len(),
            generator: generator.to_vec(),
            seed: None,
        },
    )
}

fn span(rows: &[u64]) -> Vec<u64> {
    // Basis keyed by leading bit, so every reduced row is independent.
    let mut lead: [u64; 64] = [0; 64];
    let mut basis = Vec::new();
    for &r in rows {
        let mut v = r;
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if lead[top] == 0 {
                lead[top] = v;
                basis.push(v);
                break;
            }
            v ^= lead[top];
        }
    }
    let mut words = vec![0u64];
    for &b in &basis {
        let more: Vec<u64> = words.iter().map(|&w| w ^ b).collect();
        words.extend(more);
    }
    words
}

/// Number of codewords of each weight `0..=n`.
pub fn weight_distribution(code: &BinaryCode) -> Vec<u64> {
    let mut counts = vec![0u64; code.n() + 1];
    for &w in code.words() {
        counts[w.count_ones() as usize] += 1;
    }
    counts
}

/// `B^i_w`: number of codewords at distance `w` from `x_i`, with `B^i_0 = 1`.
pub fn local_distance_distribution(code: &BinaryCode, i: usize) -> Result<Vec<u64>> {
    let xi = code.word(i)?;
    let mut counts = vec![0u64; code.n() + 1];
    for &x in code.words() {
        counts[distance(xi, x)] += 1;
    }
    Ok(counts)
}
