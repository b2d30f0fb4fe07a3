//! Straight-line principle and the assembled reliability bounds.

use crate::curve::{rate_grid, BoundId, Branch, CurvePoint, ExponentCurve};
use crate::error::{Error, Result};
use crate::info::{random_coding_exponent, sphere_packing_exponent, Channel};
use crate::optim::minimax::IntersectionProfile;
use crate::optim::thresholds::{JplUpperBound, ThresholdReport};

/// How far above the curve an anchor may sit before it is rejected.
pub const ANCHOR_TOL: f64 = 1e-9;
/// Rate step of the sphere-packing samples the composite line is fitted to.
pub const SPHERE_STEP: f64 = 1e-4;

/// The line from an anchor touching a convex curve from below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub anchor: (f64, f64),
    pub slope: f64,
    pub tangent_rate: f64,
}

impl Segment {
    pub fn value_at(&self, rate: f64) -> f64 {
        self.anchor.1 + self.slope * (rate - self.anchor.0)
    }

    pub fn contains(&self, rate: f64) -> bool {
        rate >= self.anchor.0 && rate <= self.tangent_rate
    }
}

/// Minimum-slope chord from `anchor` to the samples at higher rates.
pub fn tangent_segment(anchor: (f64, f64), curve: &ExponentCurve) -> Result<Segment> {
    let (ra, ea) = anchor;
    let pts = curve.points();
    let last = pts
        .last()
        .ok_or_else(|| Error::Geometry("empty curve".into()))?;
    if !(ra < last.rate) {
        return Err(Error::Geometry(format!(
            "anchor rate {ra} is not below the curve's last rate {}",
            last.rate
        )));
    }
    if let Some(v) = curve.value_at(ra) {
        if ea > v + ANCHOR_TOL {
            return Err(Error::Geometry(format!(
                "anchor ({ra}, {ea}) lies above the curve value {v}"
            )));
        }
    }
    let (slope, tangent_rate) = pts
        .iter()
        .filter(|p| p.rate > ra)
        .map(|p| ((p.value - ea) / (p.rate - ra), p.rate))
        .fold((f64::INFINITY, ra), |best, c| if c.0 < best.0 { c } else { best });
    Ok(Segment {
        anchor,
        slope,
        tangent_rate,
    })
}

/// The curve with its part between the anchor and the tangency replaced by
/// the line, sampled at the anchor and at the curve's rates above it.
pub fn straight_line_envelope(anchor: (f64, f64), curve: &ExponentCurve) -> Result<ExponentCurve> {
    let seg = tangent_segment(anchor, curve)?;
    let mut points = vec![CurvePoint {
        rate: anchor.0,
        value: anchor.1,
        branch: Branch::Line,
    }];
    for p in curve.points().iter().filter(|p| p.rate > anchor.0) {
        points.push(if p.rate < seg.tangent_rate {
            CurvePoint {
                rate: p.rate,
                value: seg.value_at(p.rate),
                branch: Branch::Line,
            }
        } else {
            *p
        });
    }
    ExponentCurve::new(curve.channel, BoundId::StraightLine, points)
}

/// Sphere-packing exponent sampled on `[from, capacity]`.
pub fn sphere_packing_curve(ch: &Channel, from: f64, step: f64) -> Result<ExponentCurve> {
    let points = rate_grid(from, ch.capacity(), step)?
        .into_iter()
        .map(|r| {
            Ok(CurvePoint {
                rate: r,
                value: sphere_packing_exponent(r, ch)?,
                branch: Branch::Sphere,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ExponentCurve::new(*ch, BoundId::SpherePacking, points)
}

#[derive(Debug, Clone)]
pub struct ReliabilityBounds {
    pub lower: ExponentCurve,
    pub upper: ExponentCurve,
    pub report: ThresholdReport,
    pub segment: Segment,
}

/// Random coding lower bound and the composite upper bound on `grid`.
///
/// The upper bound is the pointwise minimum of the JPL-based bound
/// (`new-a` at low rates, `new-b` at high rates), sphere packing, and the line
/// from `(r1, upper(r1))` tangent to sphere packing.
pub fn reliability_bounds(ch: &Channel, grid: &[f64]) -> Result<ReliabilityBounds> {
    let profile = IntersectionProfile::new(ch);
    let report = ThresholdReport::new(ch, &profile)?;
    let jpl = JplUpperBound::with_r0(profile, report.r0);

    let anchor_value = jpl.at(report.r1)?.value;
    let sphere = sphere_packing_curve(ch, report.r1, SPHERE_STEP)?;
    let segment = tangent_segment((report.r1, anchor_value), &sphere)?;

    let mut lower = Vec::with_capacity(grid.len());
    let mut upper = Vec::with_capacity(grid.len());
    for &r in grid {
        let e0 = random_coding_exponent(r, ch)?;
        lower.push(CurvePoint {
            rate: r,
            value: e0.value,
            branch: e0.branch.into(),
        });
        let jp = jpl.at(r)?;
        let mut best = (jp.value, jp.branch);
        let sp = sphere_packing_exponent(r, ch)?;
        if sp < best.0 {
            best = (sp, Branch::Sphere);
        }
        if segment.contains(r) && segment.value_at(r) < best.0 {
            best = (segment.value_at(r), Branch::Line);
        }
        upper.push(CurvePoint {
            rate: r,
            value: best.0.max(0.0),
            branch: best.1,
        });
    }
    Ok(ReliabilityBounds {
        lower: ExponentCurve::new(*ch, BoundId::RandomCoding, lower)?,
        upper: ExponentCurve::new(*ch, BoundId::CompositeUpper, upper)?,
        report,
        segment,
    })
}
