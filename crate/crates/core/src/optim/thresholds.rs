//! Upper bounds on the reliability built from the JPL distance, and the rates
//! at which their structure changes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::Branch;
use crate::error::{Error, Result};
use crate::info::{h, kl, pairwise, Channel};
use crate::numeric::bisect;
use crate::optim::minimax::{thm1_exponent_with, Dominant, IntersectionProfile};
use crate::spectrum::{jpl_delta, jpl_rate, phi, SpectrumModel};

/// Coarse step of the rate scan that brackets the dominance switch.
pub const R0_SCAN_STEP: f64 = 0.01;
/// Bisection tolerance on the dominance switch.
pub const R0_TOL: f64 = 1e-5;
/// Central-difference step of [`tangency_check`].
pub const TANGENCY_STEP: f64 = 1e-5;

/// Rate thresholds of one channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub channel: Channel,
    pub r_x: f64,
    pub r_crit: f64,
    /// Largest rate at which the union term dominates the min-max exponent.
    pub r0: f64,
    /// Rate at which the union-bound upper bound touches the straight line of `E0`.
    pub r1: f64,
    /// Interval on which the random coding exponent is the reliability.
    pub exact_region: Option<(f64, f64)>,
}

/// Lowest `p` for which the reliability is known to equal `E0` on `[r1, r_crit]`.
pub const EXACT_REGION_MIN_P: f64 = 0.046;

impl ThresholdReport {
    pub fn new(ch: &Channel, profile: &IntersectionProfile) -> Result<Self> {
        let k = ch.constants();
        let r0 = find_r0_with(profile)?;
        let r1 = find_r1(ch)?;
        let exact_region = (ch.p() >= EXACT_REGION_MIN_P && r1 <= r0).then_some((r1, k.r_crit));
        Ok(ThresholdReport {
            channel: *ch,
            r_x: k.r_x,
            r_crit: k.r_crit,
            r0,
            r1,
            exact_region,
        })
    }
}

/// `-A(delta_bar) - R + 1 - h(delta_bar)`: the union-bound exponent of a code
/// whose spectrum starts at the JPL distance.
pub fn new_a(rate: f64, ch: &Channel) -> Result<f64> {
    let d = jpl_delta(rate)?.delta_bar;
    Ok(-pairwise(d, ch) - rate + 1.0 - h(d))
}

/// `max_{lambda <= omega <= delta_bar} B(omega, lambda) - A(lambda)`.
pub fn new_b(rate: f64, profile: &IntersectionProfile) -> Result<f64> {
    let d = jpl_delta(rate)?.delta_bar;
    Ok(profile.max_up_to(d))
}

/// Upper bound from the JPL spectrum at one rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpperPoint {
    pub value: f64,
    pub branch: Branch,
}

/// Upper bounds of one channel with the switch rate precomputed.
#[derive(Debug, Clone)]
pub struct JplUpperBound {
    profile: IntersectionProfile,
    r0: f64,
}

impl JplUpperBound {
    pub fn new(ch: &Channel) -> Result<Self> {
        Self::from_profile(IntersectionProfile::new(ch))
    }

    pub fn from_profile(profile: IntersectionProfile) -> Result<Self> {
        let r0 = find_r0_with(&profile)?;
        Ok(JplUpperBound { profile, r0 })
    }

    /// Reuses an `r0` computed elsewhere for the same profile.
    pub fn with_r0(profile: IntersectionProfile, r0: f64) -> Self {
        JplUpperBound { profile, r0 }
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn profile(&self) -> &IntersectionProfile {
        &self.profile
    }

    /// The larger of `new-a` and `new-b`.
    ///
    /// Both exponents bound the error probability of every code of the rate
    /// from below, so only their maximum is an upper bound on the
    /// reliability. Below `r0` this is always `new-a`; just above `r0` the
    /// union term still wins at `delta_bar` and `new-a` stays in force until
    /// the two curves cross.
    pub fn at(&self, rate: f64) -> Result<UpperPoint> {
        let ch = self.profile.channel();
        let cap = ch.capacity();
        if !(rate >= 0.0 && rate <= cap + 1e-12) {
            return Err(Error::RateAboveCapacity {
                rate,
                capacity: cap,
            });
        }
        let a = new_a(rate, ch)?;
        let b = new_b(rate, &self.profile)?;
        Ok(if a >= b {
            UpperPoint {
                value: a,
                branch: Branch::NewA,
            }
        } else {
            UpperPoint {
                value: b,
                branch: Branch::NewB,
            }
        })
    }
}

/// One-shot evaluation; builds the profile and `r0` on every call.
pub fn thm4_upper(rate: f64, ch: &Channel) -> Result<UpperPoint> {
    JplUpperBound::new(ch)?.at(rate)
}

fn union_dominates(rate: f64, profile: &IntersectionProfile) -> Result<bool> {
    let spectrum = SpectrumModel::jpl_induced(rate)?;
    Ok(thm1_exponent_with(profile, &spectrum)?.dominant == Dominant::UnionTerm)
}

/// Largest rate at which the union term dominates under the JPL-induced spectrum.
pub fn find_r0(ch: &Channel) -> Result<f64> {
    find_r0_with(&IntersectionProfile::new(ch))
}

pub fn find_r0_with(profile: &IntersectionProfile) -> Result<f64> {
    let cap = profile.channel().capacity();
    let steps = (cap / R0_SCAN_STEP).floor() as usize;
    if steps < 2 {
        return Err(Error::NotFound(format!(
            "capacity {cap} leaves no room for a dominance switch"
        )));
    }
    let rates: Vec<f64> = (1..steps).map(|k| k as f64 * R0_SCAN_STEP).collect();
    let flags = rates
        .par_iter()
        .map(|&r| union_dominates(r, profile))
        .collect::<Result<Vec<bool>>>()?;
    let switch = (0..flags.len() - 1)
        .rev()
        .find(|&k| flags[k] && !flags[k + 1])
        .ok_or_else(|| Error::NotFound("union term dominance never switches off".into()))?;
    let mut failure = None;
    let r0 = bisect(
        |r| match union_dominates(r, profile) {
            Ok(u) => u,
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        },
        rates[switch],
        rates[switch + 1],
        R0_TOL,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(r0),
    }
}

/// Rate where the JPL distance equals the typical weight `omega0` of the
/// straight-line part of `E0`.
pub fn find_r1(ch: &Channel) -> Result<f64> {
    jpl_rate(ch.constants().omega0)
}

/// Closed form `h(phi(omega0))`, valid while the JPL bound has its simple form.
pub fn r1_closed_form(ch: &Channel) -> f64 {
    h(phi(ch.constants().omega0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangencyGaps {
    pub r1: f64,
    pub value_gap: f64,
    pub slope_gap: f64,
}

/// Distance between `new-a` and the line `D(rho0||p) + R_crit - R` at `R1`,
/// in value and in slope.
pub fn tangency_check(ch: &Channel) -> Result<TangencyGaps> {
    tangency_check_with(ch, TANGENCY_STEP)
}

pub fn tangency_check_with(ch: &Channel, step: f64) -> Result<TangencyGaps> {
    let k = ch.constants();
    let r1 = find_r1(ch)?;
    let line = kl(k.rho0, ch.p()) + k.r_crit - r1;
    let value_gap = (new_a(r1, ch)? - line).abs();
    let slope = (new_a(r1 + step, ch)? - new_a(r1 - step, ch)?) / (2.0 * step);
    Ok(TangencyGaps {
        r1,
        value_gap,
        slope_gap: (slope + 1.0).abs(),
    })
}
