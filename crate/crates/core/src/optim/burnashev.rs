//! Conditional slice exponent `B(omega, lambda)`.
//!
//! For three codewords with `d(x_i,x_j) = d(x_i,x_k) = omega n` and
//! `d(x_j,x_k) = lambda n`, `B` is the exponent of the probability that a
//! received word equidistant from `x_i, x_j` is also equidistant from
//! `x_i, x_k`. The value is returned exactly as displayed, i.e. as
//! `(1/n) log2 P(X_ik | X_ij)`, which is never positive.

use crate::error::{Error, Result};
use crate::info::{h, Channel};
use crate::numeric::golden_section_max;

/// How the inner maximization over `eta` is carried out.
///
/// The objective is a sum of entropies of affine functions of `eta`, hence
/// concave, so golden-section search on the whole interval already finds the
/// maximum. A coarse grid in front of it only narrows the bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaSearch {
    /// Number of grid points over the feasible interval before refinement.
    pub grid_points: usize,
    /// Bracket width at which golden-section refinement stops.
    pub tol: f64,
}

impl Default for EtaSearch {
    fn default() -> Self {
        EtaSearch {
            grid_points: 9,
            tol: 1e-10,
        }
    }
}

impl EtaSearch {
    /// Grid at `1e-4` of the interval width followed by refinement.
    pub fn dense() -> Self {
        EtaSearch {
            grid_points: 10_001,
            tol: 1e-10,
        }
    }
}

/// Feasible interval `[lambda p / 2, min(lambda / 4, p (1 - omega))]` for `eta`.
pub fn eta_interval(omega: f64, lambda: f64, ch: &Channel) -> (f64, f64) {
    let p = ch.p();
    (lambda * p / 2.0, (lambda / 4.0).min(p * (1.0 - omega)))
}

/// The expression maximized over `eta`.
#[inline]
pub fn eta_objective(omega: f64, lambda: f64, eta: f64, ch: &Channel) -> f64 {
    let p = ch.p();
    let first = if lambda > 0.0 {
        lambda * h(2.0 * eta / lambda)
    } else {
        0.0
    };
    let mid_w = omega - lambda / 2.0;
    let mid = if mid_w > 0.0 {
        mid_w * h((omega - 2.0 * eta) / (2.0 * omega - lambda))
    } else {
        0.0
    };
    let rest_w = 1.0 - omega - lambda / 2.0;
    let rest = if rest_w > 0.0 {
        rest_w * h((p * (1.0 - omega) - eta) / rest_w)
    } else {
        0.0
    };
    first + mid + rest
}

/// `B(omega, lambda)` with the default `eta` search.
pub fn burnashev_b(omega: f64, lambda: f64, ch: &Channel) -> Result<f64> {
    burnashev_b_with(omega, lambda, ch, &EtaSearch::default())
}

pub fn burnashev_b_with(omega: f64, lambda: f64, ch: &Channel, search: &EtaSearch) -> Result<f64> {
    if !(0.0..=1.0).contains(&omega) {
        return Err(Error::domain("omega", omega, "[0, 1]"));
    }
    if !(0.0..=omega).contains(&lambda) {
        return Err(Error::domain("lambda", lambda, "[0, omega]"));
    }
    // Empty exactly when lambda > 2 (1 - omega), i.e. when no triple of words
    // has these distances.
    let (lo, hi) = eta_interval(omega, lambda, ch);
    if lo > hi {
        return Err(Error::EmptyEtaInterval {
            omega,
            lambda,
            lo,
            hi,
        });
    }
    let prefix = -omega - (1.0 - omega) * h(ch.p());
    let f = |eta: f64| eta_objective(omega, lambda, eta, ch);
    if hi - lo <= search.tol {
        return Ok(prefix + f(lo).max(f(hi)));
    }

    let n = search.grid_points.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let (mut best_k, mut best_v) = (0, f64::NEG_INFINITY);
    for k in 0..n {
        let v = f(lo + step * k as f64);
        if v > best_v {
            best_k = k;
            best_v = v;
        }
    }
    let a = lo + step * best_k.saturating_sub(1) as f64;
    let b = (lo + step * (best_k + 1) as f64).min(hi);
    let (_, v) = golden_section_max(f, a, b, search.tol);
    Ok(prefix + best_v.max(v))
}
