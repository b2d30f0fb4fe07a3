//! Binary information measures, the BSC and its random coding exponent.
//!
//! All logarithms are base 2 and rates are in bits per channel use.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance of [`entropy_inv`].
pub const ENTROPY_INV_TOL: f64 = 1e-12;

/// Binary entropy `h(x) = -x log x - (1-x) log(1-x)`, with `0 log 0 = 0`.
pub fn entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain("x", x, "[0, 1]"));
    }
    Ok(h(x))
}

/// Entropy without domain checks; arguments are clamped to `[0, 1]`.
#[inline]
pub(crate) fn h(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Inverse of the entropy restricted to `[0, 1/2]`, by bisection.
pub fn entropy_inv(y: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::domain("y", y, "[0, 1]"));
    }
    Ok(h_inv(y))
}

pub(crate) fn h_inv(y: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    if y >= 1.0 {
        return 0.5;
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    while hi - lo > ENTROPY_INV_TOL {
        let mid = 0.5 * (lo + hi);
        if h(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Kullback-Leibler divergence between Bernoulli(x) and Bernoulli(y), in bits.
pub fn divergence(x: f64, y: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain("x", x, "[0, 1]"));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::domain("y", y, "(0, 1)"));
    }
    Ok(kl(x, y))
}

#[inline]
pub(crate) fn kl(x: f64, y: f64) -> f64 {
    let a = if x > 0.0 { x * (x / y).log2() } else { 0.0 };
    let b = if x < 1.0 {
        (1.0 - x) * ((1.0 - x) / (1.0 - y)).log2()
    } else {
        0.0
    };
    (a + b).max(0.0)
}

/// Binary symmetric channel with crossover probability `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Channel {
    p: f64,
}

impl Channel {
    /// `0 < p <= 1/2`; the value `1/2` is only meaningful for degenerate checks.
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 0.0 && p <= 0.5) {
            return Err(Error::domain("p", p, "(0, 1/2]"));
        }
        Ok(Channel { p })
    }

    /// The noiseless channel, only used to drive simulations.
    pub fn noiseless() -> Self {
        Channel { p: 0.0 }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Capacity `1 - h(p)`.
    pub fn capacity(&self) -> f64 {
        1.0 - h(self.p)
    }

    /// `log2(2 sqrt(p (1-p)))`, the Bhattacharyya exponent per unit distance.
    pub fn bhattacharyya(&self) -> f64 {
        (2.0 * (self.p * (1.0 - self.p)).sqrt()).log2()
    }

    pub fn constants(&self) -> ChannelConstants {
        channel_constants(self)
    }
}

/// Branch-point constants of the random coding exponent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelConstants {
    pub rho0: f64,
    pub omega0: f64,
    pub r_x: f64,
    pub r_crit: f64,
}

/// Pairwise error exponent `A(omega) = omega log2(2 sqrt(p(1-p)))`.
pub fn pairwise_exponent(omega: f64, ch: &Channel) -> Result<f64> {
    if !(0.0..=1.0).contains(&omega) {
        return Err(Error::domain("omega", omega, "[0, 1]"));
    }
    Ok(pairwise(omega, ch))
}

#[inline]
pub(crate) fn pairwise(omega: f64, ch: &Channel) -> f64 {
    if omega == 0.0 {
        return 0.0;
    }
    omega * ch.bhattacharyya()
}

pub fn channel_constants(ch: &Channel) -> ChannelConstants {
    let p = ch.p;
    let rho0 = p.sqrt() / (p.sqrt() + (1.0 - p).sqrt());
    let omega0 = 2.0 * rho0 * (1.0 - rho0);
    ChannelConstants {
        rho0,
        omega0,
        r_x: 1.0 - h(omega0),
        r_crit: 1.0 - h(rho0),
    }
}

/// Gilbert-Varshamov distance `h^{-1}(1 - R)`.
pub fn gv_distance(rate: f64) -> Result<f64> {
    check_rate(rate)?;
    Ok(h_inv(1.0 - rate))
}

/// Elias distance `2 d (1 - d)` with `d` the GV distance.
pub fn elias_distance(rate: f64) -> Result<f64> {
    let d = gv_distance(rate)?;
    Ok(2.0 * d * (1.0 - d))
}

pub(crate) fn check_rate(rate: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::domain("rate", rate, "[0, 1]"));
    }
    Ok(())
}

/// Which piece of the three-branch random coding exponent is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum E0Branch {
    /// Expurgated piece, `0 <= R <= R_x`.
    A,
    /// Straight line of slope -1, `R_x <= R <= R_crit`.
    B,
    /// Sphere-packing piece, `R_crit <= R <= 1 - h(p)`.
    C,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomCodingPoint {
    pub value: f64,
    pub branch: E0Branch,
    /// Typical relative weight of the incorrectly decoded codeword.
    pub omega_typ: f64,
}

/// Random coding exponent `E0(R, p)` with the typical incorrect-codeword weight.
///
/// At a branch boundary the lower-rate branch is reported; the values agree
/// there.
pub fn random_coding_exponent(rate: f64, ch: &Channel) -> Result<RandomCodingPoint> {
    check_rate(rate)?;
    let cap = ch.capacity();
    // One ulp of slack so that a grid ending at the capacity is accepted.
    if rate > cap + 1e-12 {
        return Err(Error::RateAboveCapacity {
            rate,
            capacity: cap,
        });
    }
    let k = ch.constants();
    let dgv = h_inv(1.0 - rate);
    let point = if rate <= k.r_x {
        RandomCodingPoint {
            value: -dgv * ch.bhattacharyya(),
            branch: E0Branch::A,
            omega_typ: dgv,
        }
    } else if rate <= k.r_crit {
        RandomCodingPoint {
            value: kl(k.rho0, ch.p) + k.r_crit - rate,
            branch: E0Branch::B,
            omega_typ: k.omega0,
        }
    } else {
        RandomCodingPoint {
            value: kl(dgv.max(ch.p), ch.p),
            branch: E0Branch::C,
            omega_typ: 2.0 * dgv * (1.0 - dgv),
        }
    };
    Ok(point)
}

/// Sphere-packing exponent `D(h^{-1}(1-R) || p)`, valid at every rate up to capacity.
pub fn sphere_packing_exponent(rate: f64, ch: &Channel) -> Result<f64> {
    check_rate(rate)?;
    let cap = ch.capacity();
    if rate > cap + 1e-12 {
        return Err(Error::RateAboveCapacity {
            rate,
            capacity: cap,
        });
    }
    Ok(kl(h_inv(1.0 - rate).max(ch.p), ch.p))
}

/// Union-bound exponent of the random linear ensemble,
/// `min_{omega >= delta_GV} [-A(omega) - R + 1 - h(omega)]`, floored at zero.
///
/// The unconstrained minimizer is `omega0`, so this is the expurgated piece
/// below `R_x` and the line of slope -1 above it, with no sphere-packing piece.
pub fn union_exponent(rate: f64, ch: &Channel) -> Result<f64> {
    check_rate(rate)?;
    let cap = ch.capacity();
    if rate > cap + 1e-12 {
        return Err(Error::RateAboveCapacity {
            rate,
            capacity: cap,
        });
    }
    let k = ch.constants();
    let omega = h_inv(1.0 - rate).max(k.omega0);
    Ok((-pairwise(omega, ch) - rate + 1.0 - h(omega)).max(0.0))
}
