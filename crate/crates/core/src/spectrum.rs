//! Linear-programming distance bounds and distance-spectrum profiles.
//!
//! The JPL (second MRRW) bound on the relative minimum distance is
//! `min_alpha G(alpha, tau)` where `tau <= alpha` is tied to `alpha` by
//! `h(tau) = h(alpha) - (1 - R)`. For rates up to about 0.305 the minimum sits
//! at `alpha = 1/2` and the bound reduces to `phi(h^{-1}(R))` with
//! `phi(x) = 1/2 - sqrt(x (1 - x))`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::info::{check_rate, h, h_inv};
use crate::numeric::{adaptive_simpson, bisect, golden_section_max, golden_section_min, linspace};

/// Discriminants down to this value are treated as zero inside the Hahn integrand.
pub const DISCRIMINANT_CLAMP: f64 = -1e-12;
/// Absolute tolerance of the Hahn exponent quadrature.
pub const HAHN_QUAD_TOL: f64 = 1e-8;
/// Step of the alpha grid used when maximizing the spectrum bound over alpha.
pub const MU_ALPHA_STEP: f64 = 1e-3;

const FEAS_TOL: f64 = 1e-12;

/// `phi(x) = 1/2 - sqrt(x (1 - x))`, an involution on `[0, 1/2]`.
pub fn phi(x: f64) -> f64 {
    0.5 - (x * (1.0 - x)).max(0.0).sqrt()
}

/// `G(alpha, tau) = 2 (alpha(1-alpha) - tau(1-tau)) / (1 + 2 sqrt(tau(1-tau)))`.
pub fn jpl_g(alpha: f64, tau: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&alpha) {
        return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
    }
    if !(tau >= 0.0 && tau <= alpha + FEAS_TOL) {
        return Err(Error::domain("tau", tau, "[0, alpha]"));
    }
    Ok(g_unchecked(alpha, tau.min(alpha)))
}

#[inline]
fn g_unchecked(alpha: f64, tau: f64) -> f64 {
    let st = (tau * (1.0 - tau)).sqrt();
    2.0 * (alpha * (1.0 - alpha) - tau * (1.0 - tau)) / (1.0 + 2.0 * st)
}

/// `tau(alpha)` solving `h(tau) = h(alpha) - 1 + R`, or `None` when infeasible.
#[inline]
fn tau_of(rate: f64, alpha: f64) -> Option<f64> {
    let y = h(alpha) - 1.0 + rate;
    if y < -FEAS_TOL {
        None
    } else {
        Some(h_inv(y.max(0.0)))
    }
}

/// Minimizer of the JPL program at one rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JplPoint {
    pub rate: f64,
    pub delta_bar: f64,
    pub alpha_star: f64,
    pub tau_star: f64,
}

/// How the minimization over alpha is carried out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JplSearch {
    pub grid_step: f64,
    pub refine_tol: f64,
    /// Skip golden-section refinement and trust the grid (verification mode).
    pub full_grid: bool,
}

impl Default for JplSearch {
    fn default() -> Self {
        JplSearch {
            grid_step: 1e-3,
            refine_tol: 1e-8,
            full_grid: false,
        }
    }
}

/// JPL bound `delta_bar(R)` with default search settings.
pub fn jpl_delta(rate: f64) -> Result<JplPoint> {
    jpl_delta_with(rate, &JplSearch::default())
}

pub fn jpl_delta_with(rate: f64, search: &JplSearch) -> Result<JplPoint> {
    check_rate(rate).map_err(|_| Error::InfeasibleRate(rate))?;
    let lo = h_inv(1.0 - rate);
    let width = 0.5 - lo;
    let n = ((width / search.grid_step).ceil() as usize).max(1) + 1;
    let alphas = linspace(lo, 0.5, n);
    let objective = |a: f64| match tau_of(rate, a) {
        Some(t) => g_unchecked(a, t),
        None => f64::INFINITY,
    };

    let (mut best_a, mut best_v) = (f64::NAN, f64::INFINITY);
    let mut best_k = 0;
    for (k, &a) in alphas.iter().enumerate() {
        let v = objective(a);
        if v < best_v {
            best_v = v;
            best_a = a;
            best_k = k;
        }
    }
    if !best_v.is_finite() {
        return Err(Error::InfeasibleRate(rate));
    }
    if !search.full_grid && alphas.len() > 1 {
        let a0 = alphas[best_k.saturating_sub(1)];
        let a1 = alphas[(best_k + 1).min(alphas.len() - 1)];
        let (a, v) = golden_section_min(objective, a0, a1, search.refine_tol);
        if v < best_v {
            best_v = v;
            best_a = a;
        }
    }
    let tau = tau_of(rate, best_a).unwrap_or(0.0);
    Ok(JplPoint {
        rate,
        delta_bar: best_v,
        alpha_star: best_a,
        tau_star: tau,
    })
}

/// Inverse `R_bar(delta)` of the JPL bound by bisection on the rate.
pub fn jpl_rate(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::OutOfRange {
            what: "delta",
            value: delta,
            lo: 0.0,
            hi: 0.5,
        });
    }
    let mut failure = None;
    let r = bisect(
        |r| match jpl_delta(r) {
            Ok(pt) => pt.delta_bar > delta,
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        },
        0.0,
        1.0,
        1e-11,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

/// Exponent `q(alpha, tau, omega)` of the Hahn polynomial `H^{alpha n}_{tau n}(omega n)`.
pub fn hahn_exponent_q(alpha: f64, tau: f64, omega: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&alpha) {
        return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
    }
    if !(tau >= 0.0 && tau <= alpha + FEAS_TOL) {
        return Err(Error::domain("tau", tau, "[0, alpha]"));
    }
    if !(omega >= 0.0 && omega < alpha) {
        return Err(Error::domain("omega", omega, "[0, alpha)"));
    }
    let base = alpha * (1.0 - alpha) - tau * (1.0 - tau);
    let mut integrand = |y: f64| -> Result<f64> {
        let p = base - y * (1.0 - 2.0 * y);
        let q = (alpha - y) * (1.0 - alpha - y);
        let disc = p * p - 4.0 * q * y * y;
        if disc < DISCRIMINANT_CLAMP {
            return Err(Error::NegativeDiscriminant { y, value: disc });
        }
        let num = p + disc.max(0.0).sqrt();
        if !(num > 0.0) || !(q > 0.0) {
            return Err(Error::NegativeDiscriminant { y, value: num });
        }
        Ok((num / (2.0 * q)).log2())
    };
    let integral = adaptive_simpson(&mut integrand, 0.0, omega, HAHN_QUAD_TOL)?;
    Ok(h(tau) + integral)
}

/// Distance-distribution exponent `mu(R, alpha, omega)` guaranteed by the
/// linear-programming spectrum bound.
pub fn spectrum_mu(rate: f64, alpha: f64, omega: f64) -> Result<f64> {
    check_rate(rate)?;
    if !(0.0..=0.5).contains(&alpha) {
        return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
    }
    let tau = tau_of(rate, alpha).ok_or_else(|| {
        Error::Infeasible(format!("h(alpha) < 1 - R for alpha = {alpha}, R = {rate}"))
    })?;
    let g = g_unchecked(alpha, tau);
    if !(omega >= 0.0 && omega <= g + FEAS_TOL) {
        return Err(Error::OutOfRange {
            what: "omega",
            value: omega,
            lo: 0.0,
            hi: g,
        });
    }
    let q = hahn_exponent_q(alpha, tau, 0.5 * omega)?;
    let tail = if omega < 1.0 {
        (1.0 - omega) * h(((alpha - 0.5 * omega) / (1.0 - omega)).clamp(0.0, 1.0))
    } else {
        0.0
    };
    Ok(rate - 1.0 + h(tau) + 2.0 * h(alpha) - 2.0 * q - omega - tail)
}

/// Best guaranteed spectrum exponent at each `omega` of the grid: the maximum
/// over feasible `alpha` of `mu(R, alpha, omega)`.
///
/// Cells with no feasible `alpha` hold `-inf`.
pub fn mu_best_over_alpha(rate: f64, omega_grid: &[f64]) -> Result<SpectrumModel> {
    check_rate(rate)?;
    if omega_grid.is_empty() {
        return Err(Error::Config("omega grid is empty".into()));
    }
    if omega_grid.iter().any(|w| !(0.0..=0.5).contains(w))
        || omega_grid.windows(2).any(|w| !(w[1] > w[0]))
    {
        return Err(Error::Config(
            "omega grid must increase strictly within [0, 1/2]".into(),
        ));
    }
    let values: Vec<f64> = omega_grid
        .par_iter()
        .map(|&w| best_mu_at(rate, w))
        .collect();
    Ok(SpectrumModel::tabulated(omega_grid.to_vec(), values))
}

fn best_mu_at(rate: f64, omega: f64) -> f64 {
    let lo = h_inv(1.0 - rate);
    let n = (((0.5 - lo) / MU_ALPHA_STEP).ceil() as usize).max(1) + 1;
    let alphas = linspace(lo, 0.5, n);
    let f = |a: f64| spectrum_mu(rate, a, omega).unwrap_or(f64::NEG_INFINITY);
    let vals: Vec<f64> = alphas.iter().map(|&a| f(a)).collect();
    let (k, &best) = match vals
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
    {
        Some(kv) => kv,
        None => return f64::NEG_INFINITY,
    };
    if best == f64::NEG_INFINITY || alphas.len() < 2 {
        return best;
    }
    let a0 = alphas[k.saturating_sub(1)];
    let a1 = alphas[(k + 1).min(alphas.len() - 1)];
    let (_, refined) = golden_section_max(f, a0, a1, 1e-9);
    best.max(refined)
}

type Profile = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Exponent profile `beta(omega)` of a code family's distance distribution,
/// together with its minimum relative distance.
#[derive(Clone)]
pub struct SpectrumModel {
    delta: f64,
    beta: Profile,
    label: String,
}

impl fmt::Debug for SpectrumModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectrumModel")
            .field("delta", &self.delta)
            .field("label", &self.label)
            .finish()
    }
}

impl SpectrumModel {
    pub fn new(
        delta: f64,
        label: impl Into<String>,
        beta: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        SpectrumModel {
            delta,
            beta: Arc::new(beta),
            label: label.into(),
        }
    }

    /// Typical random linear code: `beta(omega) = R - 1 + h(omega)` from the GV distance.
    pub fn random_linear(rate: f64) -> Result<Self> {
        check_rate(rate)?;
        Ok(Self::new(h_inv(1.0 - rate), "random-linear", move |w| {
            rate - 1.0 + h(w)
        }))
    }

    /// Same profile as [`random_linear`](Self::random_linear), but starting at the JPL distance.
    pub fn jpl_induced(rate: f64) -> Result<Self> {
        let pt = jpl_delta(rate)?;
        Ok(Self::new(pt.delta_bar, "jpl-induced", move |w| {
            rate - 1.0 + h(w)
        }))
    }

    /// Piecewise-linear profile through `(omega_k, value_k)`; `-inf` outside the samples.
    pub fn tabulated(omegas: Vec<f64>, values: Vec<f64>) -> Self {
        let delta = omegas.first().copied().unwrap_or(0.0);
        let beta = move |w: f64| -> f64 {
            let n = omegas.len();
            if n == 0 || w < omegas[0] || w > omegas[n - 1] {
                return f64::NEG_INFINITY;
            }
            let idx = omegas.partition_point(|&x| x < w);
            if idx < n && omegas[idx] == w {
                return values[idx];
            }
            let (w0, w1) = (omegas[idx - 1], omegas[idx]);
            let (v0, v1) = (values[idx - 1], values[idx]);
            if !v0.is_finite() || !v1.is_finite() {
                return f64::NEG_INFINITY;
            }
            v0 + (w - w0) / (w1 - w0) * (v1 - v0)
        };
        Self::new(delta, "tabulated", beta)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn beta(&self, omega: f64) -> f64 {
        (self.beta)(omega)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::info::{elias_distance, gv_distance};

    #[test]
    fn g_values() {
        assert_eq!(jpl_g(0.3, 0.3).unwrap(), 0.0);
        assert_eq!(jpl_g(0.5, 0.0).unwrap(), 0.5);
        // 2 * 0.12 / 1.6
        assert!((jpl_g(0.3, 0.1).unwrap() - 0.15).abs() < 1e-15);
        assert!(jpl_g(0.3, 0.4).is_err());
        assert!(jpl_g(0.6, 0.1).is_err());
    }

    #[test]
    fn jpl_simple_form_anchor() {
        let pt = jpl_delta(0.155196).unwrap();
        assert!((pt.delta_bar - 0.351734).abs() < 1e-4);
        let lhs = h(pt.tau_star);
        let rhs = h(pt.alpha_star) - (1.0 - pt.rate);
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn jpl_matches_phi_in_simple_regime() {
        for &r in &[0.01, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.305] {
            let d = jpl_delta(r).unwrap().delta_bar;
            assert!((d - phi(h_inv(r))).abs() <= 1e-6, "R={r}");
        }
    }

    #[test]
    fn jpl_limits_and_sandwich() {
        assert!(jpl_delta(1.0).unwrap().delta_bar < 1e-6);
        assert!(jpl_delta(0.999).unwrap().delta_bar < 2e-3);
        assert!((jpl_delta(0.0).unwrap().delta_bar - 0.5).abs() < 1e-12);
        assert!(matches!(jpl_delta(1.2), Err(Error::InfeasibleRate(_))));
        let mut prev = f64::INFINITY;
        for k in 1..100 {
            let r = k as f64 / 100.0;
            let d = jpl_delta(r).unwrap().delta_bar;
            assert!(d >= gv_distance(r).unwrap() - 1e-12, "R={r}");
            assert!(d < elias_distance(r).unwrap(), "R={r}");
            assert!(d < prev);
            prev = d;
        }
    }

    #[test]
    fn refined_search_agrees_with_full_grid() {
        let fine = JplSearch {
            grid_step: 1e-5,
            full_grid: true,
            ..Default::default()
        };
        for &r in &[0.35, 0.5, 0.7] {
            let a = jpl_delta(r).unwrap().delta_bar;
            let b = jpl_delta_with(r, &fine).unwrap().delta_bar;
            assert!(a <= b + 1e-12 && b - a < 1e-8, "R={r}: {a} vs {b}");
        }
    }

    #[test]
    fn jpl_rate_inverts() {
        assert!((jpl_rate(0.351734).unwrap() - 0.155196).abs() < 1e-4);
        // closed form h(phi(delta)) in the simple regime
        assert!((jpl_rate(0.351734).unwrap() - h(phi(0.351734))).abs() < 1e-9);
        assert!((jpl_rate(0.281567).unwrap() - 0.2874).abs() < 1e-3);
        for &r in &[0.05, 0.15, 0.25, 0.4, 0.6] {
            let d = jpl_delta(r).unwrap().delta_bar;
            assert!((jpl_rate(d).unwrap() - r).abs() < 1e-5);
        }
        assert!(jpl_rate(0.5).is_err());
        assert!(jpl_rate(0.0).is_err());
    }

    /// Midpoint rule with a fixed step, independent of the adaptive quadrature.
    fn q_riemann(alpha: f64, tau: f64, omega: f64, step: f64) -> f64 {
        let n = (omega / step).round() as usize;
        let dy = omega / n as f64;
        let base = alpha * (1.0 - alpha) - tau * (1.0 - tau);
        let mut s = 0.0;
        for i in 0..n {
            let y = (i as f64 + 0.5) * dy;
            let p = base - y * (1.0 - 2.0 * y);
            let q = (alpha - y) * (1.0 - alpha - y);
            let d = (p * p - 4.0 * q * y * y).max(0.0);
            s += ((p + d.sqrt()) / (2.0 * q)).log2() * dy;
        }
        h(tau) + s
    }

    #[test]
    fn hahn_exponent_values() {
        assert_eq!(hahn_exponent_q(0.3, 0.1, 0.0).unwrap(), h(0.1));
        let q = hahn_exponent_q(0.3, 0.1, 0.05).unwrap();
        assert!((q - q_riemann(0.3, 0.1, 0.05, 1e-6)).abs() < 1e-6);
        // first-order expansion near zero
        let w = 1e-4;
        let p0: f64 = 0.3 * 0.7 - 0.1 * 0.9;
        let lin = h(0.1) + w * (p0 / (0.3 * 0.7)).log2();
        assert!((hahn_exponent_q(0.3, 0.1, w).unwrap() - lin).abs() < 1e-7);
    }

    #[test]
    fn hahn_exponent_rejects_invalid_range() {
        // alpha = 1/2: the discriminant vanishes at y = phi(tau)/2 and is negative beyond
        let tau = 0.1;
        let edge = phi(tau) / 2.0;
        assert!(hahn_exponent_q(0.5, tau, edge).is_ok());
        assert!(matches!(
            hahn_exponent_q(0.5, tau, edge + 0.02),
            Err(Error::NegativeDiscriminant { .. })
        ));
    }

    #[test]
    fn hahn_exponent_non_increasing_where_integrand_negative() {
        let mut prev = hahn_exponent_q(0.3, 0.1, 0.0).unwrap();
        for k in 1..=10 {
            let q = hahn_exponent_q(0.3, 0.1, k as f64 * 0.005).unwrap();
            assert!(q <= prev);
            prev = q;
        }
    }

    #[test]
    fn mu_vanishes_at_zero() {
        for i in 0..10 {
            let r = 0.05 + 0.09 * i as f64;
            let lo = h_inv(1.0 - r);
            for j in 0..10 {
                let a = lo + (0.5 - lo) * (j as f64 + 0.5) / 10.0;
                let m = spectrum_mu(r, a, 0.0).unwrap();
                assert!(m.abs() < 1e-9, "R={r} alpha={a}: {m}");
            }
        }
    }

    #[test]
    fn mu_agrees_with_independent_quadrature() {
        let (r, a, w) = (0.2, 0.45, 0.1);
        let tau = h_inv(h(a) - 1.0 + r);
        let q = q_riemann(a, tau, w / 2.0, 1e-6);
        let expected = r - 1.0 + h(tau) + 2.0 * h(a) - 2.0 * q - w
            - (1.0 - w) * h((a - w / 2.0) / (1.0 - w));
        let got = spectrum_mu(r, a, w).unwrap();
        assert!(got.is_finite());
        assert!((got - expected).abs() < 1e-6, "{got} vs {expected}");
    }

    #[test]
    fn mu_precondition_errors() {
        let (r, a) = (0.2, 0.45);
        let tau = h_inv(h(a) - 1.0 + r);
        let g = jpl_g(a, tau).unwrap();
        assert!(matches!(spectrum_mu(r, a, g + 0.01), Err(Error::OutOfRange { .. })));
        assert!(matches!(spectrum_mu(0.2, 0.05, 0.0), Err(Error::Infeasible(_))));
    }

    #[test]
    fn mu_best_matches_dense_alpha_grid() {
        let r = 0.1;
        let w = 0.3;
        let model = mu_best_over_alpha(r, &[0.0, 0.1, 0.2, w]).unwrap();
        assert!(model.beta(0.0).abs() < 1e-9);
        let lo = h_inv(1.0 - r);
        let mut oracle = f64::NEG_INFINITY;
        let mut a = lo;
        while a <= 0.5 {
            if let Ok(v) = spectrum_mu(r, a, w) {
                oracle = oracle.max(v);
            }
            a += 1e-4;
        }
        if let Ok(v) = spectrum_mu(r, 0.5, w) {
            oracle = oracle.max(v);
        }
        let got = model.beta(w);
        assert!(oracle.is_finite());
        assert!((got - oracle).abs() < 1e-4, "{got} vs {oracle}");
        // interpolation inside, -inf outside
        let mid = model.beta(0.25);
        assert!(mid.is_finite());
        assert_eq!(model.beta(0.45), f64::NEG_INFINITY);
    }

    #[test]
    fn mu_best_rejects_bad_grids() {
        assert!(mu_best_over_alpha(0.1, &[]).is_err());
        assert!(mu_best_over_alpha(0.1, &[0.2, 0.1]).is_err());
        assert!(mu_best_over_alpha(0.1, &[0.6]).is_err());
    }

    #[test]
    fn spectrum_models() {
        let m = SpectrumModel::random_linear(0.3).unwrap();
        assert!((m.delta() - gv_distance(0.3).unwrap()).abs() < 1e-15);
        assert!(m.beta(m.delta()).abs() < 1e-10);
        assert!((m.beta(0.5) - 0.3).abs() < 1e-15);
        let j = SpectrumModel::jpl_induced(0.3).unwrap();
        assert!(j.delta() > m.delta());
        assert!(format!("{j:?}").contains("jpl-induced"));
    }
}
