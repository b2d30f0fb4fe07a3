//! Exact probabilities of equidistant slices for three codewords.
//!
//! With `x_i` sent and `e = y + x_i`, the slice `X_ij` holds the error
//! patterns of weight `t` meeting the support of `x_i + x_j` in exactly
//! `w/2` places. The supports of `x_i + x_j` and `x_i + x_k` split the
//! coordinates into four cells, and `|X_ij & X_ik|` is a sum over how the
//! pattern meets them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::Channel;
use crate::lab::exact::log2_bsc_weight;
use crate::numeric::{log2_binomial, log2_sum};

/// `log2 |X_ij|` for slice radius `t`.
fn log2_slice_count(n: usize, w: usize, t: usize) -> f64 {
    if w % 2 == 1 || t < w / 2 {
        return f64::NEG_INFINITY;
    }
    log2_binomial(w as i64, (w / 2) as i64) + log2_binomial((n - w) as i64, (t - w / 2) as i64)
}

/// `log2 |X_ij & X_ik|` when `d(x_j, x_k) = lambda`.
fn log2_joint_count(n: usize, w: usize, lambda: usize, t: usize) -> f64 {
    if w % 2 == 1 || lambda % 2 == 1 || t < w / 2 {
        return f64::NEG_INFINITY;
    }
    let half = lambda / 2;
    let common = w - half;
    let rest = (n - w - half) as i64;
    let h = (w / 2) as i64;
    let excess = (t - w / 2) as i64;
    log2_sum((0..=half as i64).map(|e| {
        log2_binomial(common as i64, h - e)
            + 2.0 * log2_binomial(half as i64, e)
            + log2_binomial(rest, excess - e)
    }))
}

/// Slice radius: `w/2 + p(n-w)` rounded to whichever neighbor integer gives
/// the more probable slice. `None` when every candidate slice is empty.
pub fn slice_radius(n: usize, w: usize, p: f64) -> Option<usize> {
    choose_radius(n, w, p).map(|(t, _)| t)
}

fn choose_radius(n: usize, w: usize, p: f64) -> Option<(usize, f64)> {
    if w > n {
        return None;
    }
    let target = w as f64 / 2.0 + p * (n - w) as f64;
    let lo = target.floor() as usize;
    let hi = target.ceil() as usize;
    let mut best: Option<(usize, f64)> = None;
    for t in [lo, hi] {
        if t > n {
            continue;
        }
        let l = log2_slice_count(n, w, t) + log2_bsc_weight(t, n, p);
        if l.is_finite() && best.is_none_or(|(_, b)| l > b) {
            best = Some((t, l));
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SliceProbabilities {
    pub n: usize,
    /// `d(x_i, x_j) = d(x_i, x_k)`.
    pub w: usize,
    /// `d(x_j, x_k)`.
    pub lambda: usize,
    /// Slice radius actually used.
    pub t: usize,
    /// Unrounded radius `w/2 + p(n-w)`.
    pub t_target: f64,
    pub log2_p_slice: f64,
    pub log2_p_cond: f64,
    pub p_slice: f64,
    pub p_cond: f64,
}

impl SliceProbabilities {
    /// `B^i_w P(X_ij & X_ik) / P(X_ij)`; the union bound is tight while this
    /// stays exponentially below one.
    pub fn condition7(&self, neighbors: u64) -> f64 {
        neighbors as f64 * self.p_cond
    }
}

/// Slice probabilities for words given as 0/1 bytes of equal length.
pub fn slice_probabilities(xi: &[u8], xj: &[u8], xk: &[u8], ch: &Channel) -> Result<SliceProbabilities> {
    let n = xi.len();
    if xj.len() != n || xk.len() != n {
        return Err(Error::Config("slice words must have equal length".into()));
    }
    let d = |a: &[u8], b: &[u8]| a.iter().zip(b).filter(|(x, y)| x != y).count();
    let (dij, dik) = (d(xi, xj), d(xi, xk));
    if dij != dik {
        return Err(Error::DistanceMismatch { dij, dik });
    }
    slice_probabilities_from_distances(n, dij, d(xj, xk), ch)
}

/// Same computation from the distance profile alone.
pub fn slice_probabilities_from_distances(n: usize, w: usize, lambda: usize, ch: &Channel) -> Result<SliceProbabilities> {
    if w > n || lambda > 2 * w.min(n - w) || lambda % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "no three words of length {n} with distances ({w}, {w}, {lambda})"
        )));
    }
    let p = ch.p();
    let (t, log2_p_slice) = choose_radius(n, w, p)
        .ok_or_else(|| Error::EmptySlice(format!("n = {n}, w = {w}: need even w and radius in range")))?;
    let log2_joint = log2_joint_count(n, w, lambda, t) + log2_bsc_weight(t, n, p);
    let log2_p_cond = log2_joint - log2_p_slice;
    Ok(SliceProbabilities {
        n,
        w,
        lambda,
        t,
        t_target: w as f64 / 2.0 + p * (n - w) as f64,
        log2_p_slice,
        log2_p_cond,
        p_slice: log2_p_slice.exp2(),
        p_cond: log2_p_cond.exp2(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optim::burnashev_b;

    fn ch(p: f64) -> Channel {
        Channel::new(p).unwrap()
    }

    #[test]
    fn brute_force_counts() {
        // n = 8, x_i = 0, x_j = 11110000, x_k = 11001100.
        let (n, w, lambda) = (8usize, 4usize, 4usize);
        let xj = 0b0000_1111u64;
        let xk = 0b0011_0011u64;
        for t in 2..=6 {
            let (mut s, mut j) = (0u64, 0u64);
            for e in 0u64..256 {
                if e.count_ones() as usize != t {
                    continue;
                }
                let eq_j = (e ^ xj).count_ones() as usize == t;
                let eq_k = (e ^ xk).count_ones() as usize == t;
                s += eq_j as u64;
                j += (eq_j && eq_k) as u64;
            }
            assert!(((s as f64).log2() - log2_slice_count(n, w, t)).abs() < 1e-12);
            assert!(((j as f64).log2() - log2_joint_count(n, w, lambda, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn identical_pair_has_unit_conditional() {
        let xi = vec![0u8; 20];
        let mut xj = vec![0u8; 20];
        xj[..6].fill(1);
        let r = slice_probabilities(&xi, &xj, &xj, &ch(0.1)).unwrap();
        assert!(r.log2_p_cond.abs() < 1e-12);
        assert!((r.condition7(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        let xi = vec![0u8; 10];
        let mut xj = vec![0u8; 10];
        xj[..4].fill(1);
        let mut xk = vec![0u8; 10];
        xk[..3].fill(1);
        assert!(matches!(
            slice_probabilities(&xi, &xj, &xk, &ch(0.1)),
            Err(Error::DistanceMismatch { dij: 4, dik: 3 })
        ));
        let mut odd = vec![0u8; 10];
        odd[..3].fill(1);
        assert!(matches!(
            slice_probabilities(&xi, &odd, &odd, &ch(0.1)),
            Err(Error::EmptySlice(_))
        ));
    }

    #[test]
    fn exponents_at_n400() {
        let c = ch(0.08);
        let n = 400;
        let r = slice_probabilities_from_distances(n, 140, 80, &c).unwrap();
        let a = 0.35 * c.bhattacharyya();
        assert!((r.log2_p_slice / n as f64 - a).abs() <= 0.03);
        let b = burnashev_b(0.35, 0.2, &c).unwrap();
        assert!((r.log2_p_cond / n as f64 - b).abs() <= 0.05);
        assert!(r.t == 90 || r.t == 91);
    }
}
