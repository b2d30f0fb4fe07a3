//! The min-max lower-bound exponent for codes with a known distance profile.
//!
//! `E = min_{delta <= omega <= 1} max(-beta(omega) - A(omega), F(omega))` with
//! `F(omega) = max_{0 <= lambda <= omega} B(omega, lambda) - A(lambda)`.
//! `F` does not depend on the code, so [`IntersectionProfile`] tabulates it
//! once per channel and every spectrum reuses the table.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::{pairwise, Channel};
use crate::numeric::{golden_section_max, golden_section_min, linspace};
use crate::optim::burnashev::{burnashev_b_with, EtaSearch};
use crate::spectrum::SpectrumModel;

/// Margin by which the union term must exceed the intersection term at the
/// minimizer to be reported as dominant. Golden-section search stops within
/// about `1e-9` of a crossing, where the two terms differ by less than this.
pub const DOMINANCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimaxGrid {
    pub omega_points: usize,
    pub lambda_points: usize,
    /// Width at which local golden-section refinement stops.
    pub refine_tol: f64,
    pub eta: EtaSearch,
}

impl Default for MinimaxGrid {
    fn default() -> Self {
        MinimaxGrid {
            omega_points: 400,
            lambda_points: 400,
            refine_tol: 1e-9,
            eta: EtaSearch::default(),
        }
    }
}

impl MinimaxGrid {
    /// Both axes at twice the resolution.
    pub fn doubled(&self) -> Self {
        MinimaxGrid {
            omega_points: 2 * self.omega_points,
            lambda_points: 2 * self.lambda_points,
            ..*self
        }
    }
}

/// Which inner term attains the exponent at the minimizing `omega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dominant {
    UnionTerm,
    IntersectionTerm,
}

impl Dominant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Dominant::UnionTerm => "union-term",
            Dominant::IntersectionTerm => "intersection-term",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimaxPoint {
    pub exponent: f64,
    pub omega_star: f64,
    pub dominant: Dominant,
    /// `-beta - A` at the minimizer.
    pub union_term: f64,
    /// `F` at the minimizer.
    pub intersection_term: f64,
}

/// `F(omega)` tabulated on an even grid over `[0, 1]`.
#[derive(Debug, Clone)]
pub struct IntersectionProfile {
    ch: Channel,
    grid: MinimaxGrid,
    omegas: Vec<f64>,
    values: Vec<f64>,
}

impl IntersectionProfile {
    pub fn new(ch: &Channel) -> Self {
        Self::with_grid(ch, MinimaxGrid::default())
    }

    pub fn with_grid(ch: &Channel, grid: MinimaxGrid) -> Self {
        let omegas = linspace(0.0, 1.0, grid.omega_points.max(2));
        let values = omegas
            .par_iter()
            .map(|&w| intersection_term(w, ch, &grid))
            .collect();
        IntersectionProfile {
            ch: *ch,
            grid,
            omegas,
            values,
        }
    }

    pub fn channel(&self) -> &Channel {
        &self.ch
    }

    pub fn grid(&self) -> &MinimaxGrid {
        &self.grid
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `F(omega)` evaluated directly, not interpolated.
    pub fn at(&self, omega: f64) -> f64 {
        intersection_term(omega, &self.ch, &self.grid)
    }

    /// `max_{omega <= upper} F(omega)`, from the table plus refinement near the best cell.
    pub fn max_up_to(&self, upper: f64) -> f64 {
        let upper = upper.clamp(0.0, 1.0);
        let end = self.omegas.partition_point(|&w| w < upper);
        let mut best = self.at(upper);
        let mut best_k = None;
        for k in 0..end {
            if self.values[k] > best {
                best = self.values[k];
                best_k = Some(k);
            }
        }
        if let Some(k) = best_k {
            let a = self.omegas[k.saturating_sub(1)];
            let b = self.omegas[k + 1].min(upper);
            let (_, v) = golden_section_max(|w| self.at(w), a, b, self.grid.refine_tol);
            best = best.max(v);
        }
        best
    }
}

/// `F(omega) = max_{0 <= lambda <= omega} B(omega, lambda) - A(lambda)`.
///
/// Cells whose `eta` interval is empty are skipped; `lambda = 0` is always
/// feasible and contributes zero.
pub fn intersection_term(omega: f64, ch: &Channel, grid: &MinimaxGrid) -> f64 {
    let cell = |l: f64| match burnashev_b_with(omega, l, ch, &grid.eta) {
        Ok(b) => b - pairwise(l, ch),
        Err(_) => f64::NEG_INFINITY,
    };
    if omega <= 0.0 {
        return 0.0;
    }
    let lambdas = linspace(0.0, omega, grid.lambda_points.max(2));
    let (mut best_k, mut best) = (0, f64::NEG_INFINITY);
    for (k, &l) in lambdas.iter().enumerate() {
        let v = cell(l);
        if v > best {
            best = v;
            best_k = k;
        }
    }
    let a = lambdas[best_k.saturating_sub(1)];
    let b = lambdas[(best_k + 1).min(lambdas.len() - 1)];
    let (_, v) = golden_section_max(cell, a, b, grid.refine_tol);
    best.max(v)
}

/// Min-max exponent for `spectrum` on `ch` with the default grid.
pub fn thm1_exponent(ch: &Channel, spectrum: &SpectrumModel) -> Result<MinimaxPoint> {
    thm1_exponent_with(&IntersectionProfile::new(ch), spectrum)
}

/// Min-max exponent reusing a tabulated intersection profile.
///
/// Distances where `beta(omega) <= 0` carry no codewords and are excluded.
pub fn thm1_exponent_with(profile: &IntersectionProfile, spectrum: &SpectrumModel) -> Result<MinimaxPoint> {
    let ch = profile.channel();
    let delta = spectrum.delta();
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::domain("delta", delta, "[0, 1]"));
    }
    let union = |w: f64| {
        let beta = spectrum.beta(w);
        if beta.is_finite() && beta > 0.0 {
            -beta - pairwise(w, ch)
        } else if beta == f64::INFINITY {
            f64::NEG_INFINITY
        } else {
            f64::NAN
        }
    };

    let mut pts = vec![(delta, profile.at(delta))];
    pts.extend(
        profile
            .omegas()
            .iter()
            .zip(profile.values())
            .filter(|(&w, _)| w > delta)
            .map(|(&w, &f)| (w, f)),
    );
    let mut best: Option<(usize, f64)> = None;
    for (k, &(w, f)) in pts.iter().enumerate() {
        let u = union(w);
        if u.is_nan() {
            continue;
        }
        let v = u.max(f);
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((k, v));
        }
    }
    let (k, grid_value) = best.ok_or_else(|| {
        Error::Infeasible(format!(
            "spectrum '{}' is not positive anywhere on [{delta}, 1]",
            spectrum.label()
        ))
    })?;

    let objective = |w: f64| {
        let u = union(w);
        if u.is_nan() {
            f64::INFINITY
        } else {
            u.max(profile.at(w))
        }
    };
    let a = pts[k.saturating_sub(1)].0;
    let b = pts[(k + 1).min(pts.len() - 1)].0;
    let (mut w_star, mut value) = (pts[k].0, grid_value);
    let (w, v) = golden_section_min(objective, a, b, profile.grid().refine_tol);
    if v < value {
        w_star = w;
        value = v;
    }
    let u = union(w_star);
    let f = profile.at(w_star);
    let dominant = if u > f + DOMINANCE_TOL {
        Dominant::UnionTerm
    } else {
        Dominant::IntersectionTerm
    };
    Ok(MinimaxPoint {
        exponent: value,
        omega_star: w_star,
        dominant,
        union_term: u,
        intersection_term: f,
    })
}
