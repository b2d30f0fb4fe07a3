//! Upper and lower bounds on `P_e(x_i)` from the local distance distribution,
//! evaluated exactly by enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::Channel;
use crate::lab::code::{distance, local_distance_distribution, BinaryCode};
use crate::lab::exact::{log2_bsc_weight, pairwise_pi_log2, TiePolicy, MAX_EXACT_N};
use crate::lab::slice::slice_radius;
use crate::numeric::log2_sum;

/// `sum_w B^i_w pi(w)`, not capped at one.
pub fn union_bound(code: &BinaryCode, i: usize, ch: &Channel, tie: TiePolicy) -> Result<f64> {
    Ok(union_bound_log2(code, i, ch, tie)?.exp2())
}

pub fn union_bound_log2(code: &BinaryCode, i: usize, ch: &Channel, tie: TiePolicy) -> Result<f64> {
    let spec = local_distance_distribution(code, i)?;
    Ok(log2_sum(
        spec.iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &b)| b > 0)
            .map(|(w, &b)| (b as f64).log2() + pairwise_pi_log2(w, ch, tie)),
    ))
}

/// Which subset `X_ij` of the half-space `{y : d(x_j,y) <= d(x_i,y)}` is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetRule {
    /// The whole half-space, ties included.
    FullHalfspace,
    /// Received words equidistant from `x_i` and `x_j` at the slice radius.
    Slice,
}

fn check_enumerable(code: &BinaryCode) -> Result<()> {
    if code.n() > MAX_EXACT_N {
        return Err(Error::SizeGuard {
            what: "block length n for exact enumeration",
            value: code.n(),
            limit: MAX_EXACT_N,
        });
    }
    Ok(())
}

/// Membership test for `X_ij` under a subset rule.
struct Subset {
    xj: u64,
    radius: Option<usize>,
}

impl Subset {
    fn new(rule: SubsetRule, code: &BinaryCode, xi: u64, xj: u64, ch: &Channel) -> Self {
        let radius = match rule {
            SubsetRule::FullHalfspace => None,
            // An empty slice never matches.
            SubsetRule::Slice => Some(slice_radius(code.n(), distance(xi, xj), ch.p()).unwrap_or(usize::MAX)),
        };
        Subset { xj, radius }
    }

    #[inline]
    fn contains(&self, y: u64, di: usize) -> bool {
        let dj = distance(self.xj, y);
        match self.radius {
            None => dj <= di,
            Some(t) => di == t && dj == t,
        }
    }
}

/// Kounias' lower bound `sum_j [P(X_ij) - sum_{k<j} P(X_ij & X_ik)]`.
///
/// `subcode` lists the indices forming `C(i)` in the order used for `k < j`;
/// by default it is every other codeword in index order.
pub fn kounias_bound(
    code: &BinaryCode,
    i: usize,
    ch: &Channel,
    rule: SubsetRule,
    subcode: Option<&[usize]>,
) -> Result<f64> {
    check_enumerable(code)?;
    let xi = code.word(i)?;
    let members: Vec<usize> = match subcode {
        Some(s) => {
            for &j in s {
                code.word(j)?;
                if j == i {
                    return Err(Error::Config(format!("subcode contains the transmitted word {i}")));
                }
            }
            s.to_vec()
        }
        None => (0..code.len()).filter(|&j| j != i).collect(),
    };
    let sets: Vec<Subset> = members
        .iter()
        .map(|&j| Subset::new(rule, code, xi, code.words()[j], ch))
        .collect();
    let n = code.n();
    let p = ch.p();
    // A received word in s of the sets contributes s - C(s, 2) times its
    // probability, whatever the order of the sets.
    let mut by_weight = vec![0.0f64; n + 1];
    for e in 0u64..(1u64 << n) {
        let y = xi ^ e;
        let di = e.count_ones() as usize;
        let s = sets.iter().filter(|x| x.contains(y, di)).count() as f64;
        by_weight[di] += s - s * (s - 1.0) / 2.0;
    }
    Ok(by_weight
        .iter()
        .enumerate()
        .map(|(d, &c)| c * log2_bsc_weight(d, n, p).exp2())
        .sum())
}

/// How the representative pair `(x_j, x_k)` of the intersection term is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRule {
    /// The two lowest-index neighbors at distance `w`. Not a lower bound in
    /// general: other pairs may overlap more.
    Canonical,
    /// The pair with the largest intersection term, which keeps the
    /// single-pair denominator an over-estimate for every `j`.
    #[default]
    MaxIntersection,
    /// `sum_j a^2 / (e + sum_{k != j} I_jk)` over all pairs, no representative.
    AllPairs,
}

/// Preset weight functions of the error weight `u = d(x_i, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Weight {
    /// `eta = 1`: de Caen's inequality.
    Constant,
    /// `eta(u) = z^u`.
    Geometric(f64),
}

impl Weight {
    pub fn eval(&self, u: usize) -> f64 {
        match *self {
            Weight::Constant => 1.0,
            Weight::Geometric(z) => z.powi(u as i32),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CohenMerhav {
    pub value: f64,
    /// Number of neighbors `B^i_w` at the chosen distance.
    pub neighbors: usize,
    /// Representative pair, absent for a single neighbor or `AllPairs`.
    pub pair: Option<(usize, usize)>,
}

/// Weighted de Caen bound over the neighbors of `x_i` at distance `w`.
pub fn cohen_merhav_bound(
    code: &BinaryCode,
    i: usize,
    ch: &Channel,
    w: usize,
    weight: impl Fn(usize) -> f64,
    rule: PairRule,
) -> Result<CohenMerhav> {
    check_enumerable(code)?;
    let xi = code.word(i)?;
    let nb: Vec<usize> = (0..code.len())
        .filter(|&j| j != i && distance(xi, code.words()[j]) == w)
        .collect();
    if nb.is_empty() {
        return Err(Error::NoNeighborAtDistance { index: i, w });
    }
    let n = code.n();
    let b = nb.len();
    let words: Vec<u64> = nb.iter().map(|&j| code.words()[j]).collect();
    let log_py: Vec<f64> = (0..=n).map(|d| log2_bsc_weight(d, n, ch.p())).collect();
    let eta: Vec<f64> = (0..=n).map(&weight).collect();
    if let Some(bad) = eta.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
        return Err(Error::Config(format!("weight function must be positive and finite, got {bad}")));
    }

    // a_j and e_j are the same for every neighbor at distance w; accumulate
    // them for the first one and the pairwise terms I_jk for all pairs.
    let mut a = 0.0;
    let mut e = 0.0;
    let mut inter = vec![0.0f64; b * b];
    let mut inside = Vec::with_capacity(b);
    for err in 0u64..(1u64 << n) {
        let y = xi ^ err;
        let di = err.count_ones() as usize;
        inside.clear();
        inside.extend((0..b).filter(|&j| distance(words[j], y) <= di));
        if inside.is_empty() {
            continue;
        }
        let py = log_py[di].exp2();
        let pe2 = py * eta[di] * eta[di];
        if inside[0] == 0 {
            a += py * eta[di];
            e += pe2;
        }
        for (s, &j) in inside.iter().enumerate() {
            for &k in &inside[s + 1..] {
                inter[j * b + k] += pe2;
            }
        }
    }
    let pair_term = |j: usize, k: usize| inter[j.min(k) * b + j.max(k)];

    let (value, pair) = if b == 1 {
        (a * a / e, None)
    } else {
        match rule {
            PairRule::Canonical => (b as f64 * a * a / (e + (b - 1) as f64 * pair_term(0, 1)), Some((nb[0], nb[1]))),
            PairRule::MaxIntersection => {
                let mut best = (0, 1);
                for j in 0..b {
                    for k in j + 1..b {
                        if pair_term(j, k) > pair_term(best.0, best.1) {
                            best = (j, k);
                        }
                    }
                }
                let i_max = pair_term(best.0, best.1);
                (b as f64 * a * a / (e + (b - 1) as f64 * i_max), Some((nb[best.0], nb[best.1])))
            }
            PairRule::AllPairs => {
                let v = (0..b)
                    .map(|j| {
                        let s: f64 = (0..b).filter(|&k| k != j).map(|k| pair_term(j, k)).sum();
                        a * a / (e + s)
                    })
                    .sum();
                (v, None)
            }
        }
    };
    Ok(CohenMerhav {
        value,
        neighbors: b,
        pair,
    })
}
