//! Per-codeword bound report for a small code.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::Channel;
use crate::lab::bounds::{cohen_merhav_bound, kounias_bound, union_bound_log2, PairRule, SubsetRule, Weight};
use crate::lab::code::{local_distance_distribution, BinaryCode};
use crate::lab::exact::{ErrorCensus, TiePolicy};

/// Weight functions tried for the Cohen-Merhav entry; the best is kept.
pub const REPORT_WEIGHTS: [Weight; 3] = [Weight::Constant, Weight::Geometric(0.5), Weight::Geometric(0.25)];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodewordBounds {
    pub i: usize,
    pub exact: f64,
    /// `None` when the probability is exactly zero.
    pub log2_exact: Option<f64>,
    /// Union bound, not capped at one.
    pub union: f64,
    pub log2_union: Option<f64>,
    pub kounias: f64,
    pub cohen_merhav: f64,
    /// Neighbor distance used for Cohen-Merhav, the local minimum distance.
    pub cohen_merhav_distance: Option<usize>,
    pub cohen_merhav_weight: Option<Weight>,
    /// `B^i_0, ..., B^i_n`.
    pub local_spectrum: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub p: f64,
    /// Policy used for `exact` and `union`; the lower bounds include ties.
    pub tie_policy: TiePolicy,
    pub per_codeword: Vec<CodewordBounds>,
    pub average_exact: f64,
    pub log2_average_exact: Option<f64>,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Exact error probability and every bound for each codeword.
pub fn analyze_code(code: &BinaryCode, ch: &Channel, tie: TiePolicy) -> Result<BoundReport> {
    let census = ErrorCensus::new(code)?;
    let exact = census.evaluate(ch, tie);
    let mut per_codeword = Vec::with_capacity(code.len());
    for i in 0..code.len() {
        let spectrum = local_distance_distribution(code, i)?;
        let log2_union = union_bound_log2(code, i, ch, tie)?;
        let kounias = kounias_bound(code, i, ch, SubsetRule::FullHalfspace, None)?;
        let w_min = spectrum.iter().skip(1).position(|&b| b > 0).map(|w| w + 1);
        let mut cm = (0.0, None);
        if let Some(w) = w_min {
            for weight in REPORT_WEIGHTS {
                let v = cohen_merhav_bound(code, i, ch, w, |u| weight.eval(u), PairRule::MaxIntersection)?.value;
                if v > cm.0 || cm.1.is_none() {
                    cm = (v, Some(weight));
                }
            }
        }
        per_codeword.push(CodewordBounds {
            i,
            exact: exact.per_codeword[i],
            log2_exact: finite(exact.log2_per_codeword[i]),
            union: log2_union.exp2(),
            log2_union: finite(log2_union),
            kounias,
            cohen_merhav: cm.0,
            cohen_merhav_distance: w_min,
            cohen_merhav_weight: cm.1,
            local_spectrum: spectrum,
        });
    }
    Ok(BoundReport {
        n: code.n(),
        m: code.len(),
        p: ch.p(),
        tie_policy: tie,
        per_codeword,
        average_exact: exact.average,
        log2_average_exact: finite(exact.log2_average),
    })
}

pub fn save_report(report: &BoundReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

pub fn load_report(text: &str) -> Result<BoundReport> {
    serde_json::from_str(text).map_err(Error::from)
}
