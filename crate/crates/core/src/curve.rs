//! Sampled exponent curves, the unit of tabular output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::{Channel, E0Branch};

/// Label attached to each sample saying which formula produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    A,
    B,
    C,
    NewA,
    NewB,
    Sphere,
    Line,
    UnionExp,
    OmegaTyp,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::A => "a",
            Branch::B => "b",
            Branch::C => "c",
            Branch::NewA => "new-a",
            Branch::NewB => "new-b",
            Branch::Sphere => "sphere",
            Branch::Line => "line",
            Branch::UnionExp => "union-exp",
            Branch::OmegaTyp => "omega-typ",
        }
    }
}

impl From<E0Branch> for Branch {
    fn from(b: E0Branch) -> Self {
        match b {
            E0Branch::A => Branch::A,
            E0Branch::B => Branch::B,
            E0Branch::C => Branch::C,
        }
    }
}

/// Which bound a curve represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    RandomCoding,
    JplUpper,
    SpherePacking,
    UnionExponent,
    CompositeUpper,
    StraightLine,
    TypicalWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub rate: f64,
    pub value: f64,
    pub branch: Branch,
}

/// Ordered `(rate, value, branch)` samples of one bound for one channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentCurve {
    pub channel: Channel,
    pub bound: BoundId,
    points: Vec<CurvePoint>,
}

impl ExponentCurve {
    /// Validates that rates increase strictly and values are finite and nonnegative.
    pub fn new(channel: Channel, bound: BoundId, points: Vec<CurvePoint>) -> Result<Self> {
        for w in points.windows(2) {
            if !(w[1].rate > w[0].rate) {
                return Err(Error::Infeasible(format!(
                    "curve rates must increase strictly ({} then {})",
                    w[0].rate, w[1].rate
                )));
            }
        }
        if let Some(bad) = points
            .iter()
            .find(|pt| !pt.value.is_finite() || pt.value < 0.0)
        {
            return Err(Error::Infeasible(format!(
                "curve value {} at rate {} is not a finite nonnegative exponent",
                bad.value, bad.rate
            )));
        }
        Ok(ExponentCurve {
            channel,
            bound,
            points,
        })
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn rates(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.rate)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Linear interpolation of the value at `rate`; `None` outside the sampled range.
    pub fn value_at(&self, rate: f64) -> Option<f64> {
        let pts = &self.points;
        if pts.is_empty() || rate < pts[0].rate || rate > pts[pts.len() - 1].rate {
            return None;
        }
        let idx = pts.partition_point(|p| p.rate < rate);
        if idx < pts.len() && pts[idx].rate == rate {
            return Some(pts[idx].value);
        }
        let (a, b) = (&pts[idx - 1], &pts[idx]);
        let t = (rate - a.rate) / (b.rate - a.rate);
        Some(a.value + t * (b.value - a.value))
    }
}

/// Rates `min, min + step, ...` up to and including `max`.
pub fn rate_grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(min < max) || !min.is_finite() || !max.is_finite() {
        return Err(Error::Config(format!(
            "rate grid needs min < max and step > 0 (got {min}, {max}, {step})"
        )));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize;
    let mut grid: Vec<f64> = (0..=count).map(|i| min + step * i as f64).collect();
    let last = *grid.last().unwrap_or(&min);
    if max - last > step * 1e-6 {
        grid.push(max);
    } else if let Some(l) = grid.last_mut() {
        *l = l.min(max);
    }
    Ok(grid)
}
