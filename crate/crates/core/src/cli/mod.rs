//! Command implementations behind the `bscrel` binary.
//!
//! Every command returns the full text of its output, so the binary only
//! parses flags, writes the text and maps errors to exit codes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::curve::{rate_grid, BoundId, Branch, CurvePoint, ExponentCurve};
use crate::error::{Error, Result};
use crate::info::{random_coding_exponent, sphere_packing_exponent, union_exponent, Channel, ChannelConstants};
use crate::lab::{analyze_code, load_code, monte_carlo_error, BoundReport, MonteCarlo, TiePolicy};
use crate::optim::{
    reliability_bounds, tangency_check, IntersectionProfile, JplUpperBound, TangencyGaps, ThresholdReport,
};
use crate::optim::thresholds::r1_closed_form;

/// Default distance of the rate grid from `0` and from capacity, and its step.
pub const DEFAULT_RATE_MARGIN: f64 = 1e-3;
pub const DEFAULT_RATE_STEP: f64 = 1e-3;
pub const DEFAULT_TRIALS: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    E0,
    Thm4,
    Sphere,
    UnionExp,
    Composite,
}

impl CurveKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveKind::E0 => "e0",
            CurveKind::Thm4 => "thm4",
            CurveKind::Sphere => "sphere",
            CurveKind::UnionExp => "union-exp",
            CurveKind::Composite => "composite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    Fig1,
    Fig2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeCommand {
    Analyze,
    Simulate,
}

/// Flags shared by every command. `None` grid ends mean the defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub p: f64,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub r_step: f64,
    pub seed: u64,
    pub trials: u64,
    pub tie_policy: TiePolicy,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p: 0.08,
            r_min: None,
            r_max: None,
            r_step: DEFAULT_RATE_STEP,
            seed: 0,
            trials: DEFAULT_TRIALS,
            tie_policy: TiePolicy::Adversarial,
            format: OutputFormat::Csv,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn channel(&self) -> Result<Channel> {
        if !(self.p > 0.0 && self.p < 0.5) {
            return Err(Error::Config(format!("--p must lie in (0, 1/2), got {}", self.p)));
        }
        Channel::new(self.p)
    }

    /// Resolved `(min, max, step)` of the rate grid.
    pub fn grid_spec(&self) -> Result<(f64, f64, f64)> {
        let cap = self.channel()?.capacity();
        let min = self.r_min.unwrap_or(DEFAULT_RATE_MARGIN);
        let max = self.r_max.unwrap_or(cap - DEFAULT_RATE_MARGIN);
        if !(self.r_step > 0.0) {
            return Err(Error::Config(format!("--r-step must be positive, got {}", self.r_step)));
        }
        if !(min < max) {
            return Err(Error::Config(format!("--r-min {min} must be below --r-max {max}")));
        }
        if min < 0.0 || max > cap {
            return Err(Error::Config(format!(
                "rate grid [{min}, {max}] leaves [0, {cap}], the rates below capacity"
            )));
        }
        Ok((min, max, self.r_step))
    }

    pub fn grid(&self) -> Result<Vec<f64>> {
        let (min, max, step) = self.grid_spec()?;
        rate_grid(min, max, step)
    }

    pub fn validate(&self) -> Result<()> {
        self.channel()?;
        self.grid_spec()?;
        Ok(())
    }
}

/// Exit status for an error: 2 for bad input, 3 for a failed computation.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_validation() {
        2
    } else {
        3
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridMeta {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub artifact: String,
    pub version: String,
    pub command: String,
    pub p: f64,
    pub grid: Option<GridMeta>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub tie_policy: Option<TiePolicy>,
}

impl Meta {
    fn new(command: impl Into<String>, p: f64) -> Self {
        Meta {
            artifact: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            p,
            grid: None,
            seed: None,
            trials: None,
            tie_policy: None,
        }
    }

    fn with_grid(mut self, cfg: &RunConfig) -> Result<Self> {
        let (min, max, step) = cfg.grid_spec()?;
        self.grid = Some(GridMeta { min, max, step });
        Ok(self)
    }

    fn csv_line(&self) -> Result<String> {
        Ok(format!("# meta: {}\n", serde_json::to_string(self)?))
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Closed-form values printed next to the searched thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossChecks {
    pub constants: ChannelConstants,
    /// `h(phi(omega0))`.
    pub r1_closed_form: f64,
    pub tangency: TangencyGaps,
    pub e0_at_r1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdsOutput {
    pub meta: Meta,
    pub thresholds: ThresholdReport,
    pub cross_checks: CrossChecks,
}

pub fn thresholds_output(cfg: &RunConfig) -> Result<ThresholdsOutput> {
    let ch = cfg.channel()?;
    let profile = IntersectionProfile::new(&ch);
    let thresholds = ThresholdReport::new(&ch, &profile)?;
    let cross_checks = CrossChecks {
        constants: ch.constants(),
        r1_closed_form: r1_closed_form(&ch),
        tangency: tangency_check(&ch)?,
        e0_at_r1: random_coding_exponent(thresholds.r1, &ch)?.value,
    };
    Ok(ThresholdsOutput {
        meta: Meta::new("thresholds", ch.p()),
        thresholds,
        cross_checks,
    })
}

/// Thresholds with their closed-form cross-checks.
pub fn cmd_thresholds(cfg: &RunConfig) -> Result<String> {
    let out = thresholds_output(cfg)?;
    match cfg.format {
        OutputFormat::Json => json(&out),
        OutputFormat::Csv => {
            let t = &out.thresholds;
            let mut s = out.meta.csv_line()?;
            s.push_str("name,value\n");
            let (lo, hi) = t.exact_region.map_or((None, None), |(a, b)| (Some(a), Some(b)));
            let rows: [(&str, Option<f64>); 8] = [
                ("r_x", Some(t.r_x)),
                ("r1", Some(t.r1)),
                ("r0", Some(t.r0)),
                ("r_crit", Some(t.r_crit)),
                ("exact_region_lo", lo),
                ("exact_region_hi", hi),
                ("r1_closed_form", Some(out.cross_checks.r1_closed_form)),
                ("tangency_value_gap", Some(out.cross_checks.tangency.value_gap)),
            ];
            for (name, v) in rows {
                let _ = writeln!(s, "{name},{}", v.map(|x| x.to_string()).unwrap_or_default());
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveOutput {
    pub meta: Meta,
    pub curve: ExponentCurve,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositeOutput {
    pub meta: Meta,
    pub thresholds: ThresholdReport,
    pub lower: ExponentCurve,
    pub upper: ExponentCurve,
}

fn sampled(ch: &Channel, bound: BoundId, grid: &[f64], f: impl Fn(f64) -> Result<(f64, Branch)>) -> Result<ExponentCurve> {
    let points = grid
        .iter()
        .map(|&r| {
            let (value, branch) = f(r)?;
            Ok(CurvePoint {
                rate: r,
                value,
                branch,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ExponentCurve::new(*ch, bound, points)
}

/// One exponent on the rate grid.
pub fn curve(cfg: &RunConfig, kind: CurveKind) -> Result<ExponentCurve> {
    let ch = cfg.channel()?;
    let grid = cfg.grid()?;
    match kind {
        CurveKind::E0 => sampled(&ch, BoundId::RandomCoding, &grid, |r| {
            let e = random_coding_exponent(r, &ch)?;
            Ok((e.value, e.branch.into()))
        }),
        CurveKind::Sphere => sampled(&ch, BoundId::SpherePacking, &grid, |r| {
            Ok((sphere_packing_exponent(r, &ch)?, Branch::Sphere))
        }),
        CurveKind::UnionExp => sampled(&ch, BoundId::UnionExponent, &grid, |r| {
            Ok((union_exponent(r, &ch)?, Branch::UnionExp))
        }),
        CurveKind::Thm4 => {
            let jpl = JplUpperBound::new(&ch)?;
            sampled(&ch, BoundId::JplUpper, &grid, |r| {
                let u = jpl.at(r)?;
                Ok((u.value.max(0.0), u.branch))
            })
        }
        CurveKind::Composite => Ok(reliability_bounds(&ch, &grid)?.upper),
    }
}

pub fn composite_output(cfg: &RunConfig, command: &str) -> Result<CompositeOutput> {
    let ch = cfg.channel()?;
    let b = reliability_bounds(&ch, &cfg.grid()?)?;
    Ok(CompositeOutput {
        meta: Meta::new(command, ch.p()).with_grid(cfg)?,
        thresholds: b.report,
        lower: b.lower,
        upper: b.upper,
    })
}

fn composite_csv(out: &CompositeOutput, markers: &[(&str, f64)]) -> Result<String> {
    let mut s = out.meta.csv_line()?;
    for (name, r) in markers {
        let _ = writeln!(s, "# marker: {name}={r}");
    }
    s.push_str("rate,lower,lower_branch,upper,upper_branch\n");
    for (lo, up) in out.lower.points().iter().zip(out.upper.points()) {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            lo.rate,
            lo.value,
            lo.branch.as_str(),
            up.value,
            up.branch.as_str()
        );
    }
    Ok(s)
}

pub fn cmd_curve(cfg: &RunConfig, kind: CurveKind) -> Result<String> {
    let command = format!("curve {}", kind.as_str());
    if kind == CurveKind::Composite {
        let out = composite_output(cfg, &command)?;
        return match cfg.format {
            OutputFormat::Json => json(&out),
            OutputFormat::Csv => composite_csv(&out, &[]),
        };
    }
    let out = CurveOutput {
        meta: Meta::new(command, cfg.p).with_grid(cfg)?,
        curve: curve(cfg, kind)?,
    };
    match cfg.format {
        OutputFormat::Json => json(&out),
        OutputFormat::Csv => {
            let mut s = out.meta.csv_line()?;
            s.push_str("rate,value,branch\n");
            for pt in out.curve.points() {
                let _ = writeln!(s, "{},{},{}", pt.rate, pt.value, pt.branch.as_str());
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Marker {
    pub name: String,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure1 {
    pub meta: Meta,
    pub markers: Vec<Marker>,
    pub omega_typ: ExponentCurve,
    pub e0: ExponentCurve,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure2 {
    #[serde(flatten)]
    pub bounds: CompositeOutput,
    pub markers: Vec<Marker>,
}

fn markers(pairs: &[(&str, f64)]) -> Vec<Marker> {
    pairs
        .iter()
        .map(|(n, r)| Marker {
            name: n.to_string(),
            rate: *r,
        })
        .collect()
}

/// Typical incorrect-codeword weight and `E0`, labelled by `E0` branch.
pub fn figure1(cfg: &RunConfig) -> Result<Figure1> {
    let ch = cfg.channel()?;
    let grid = cfg.grid()?;
    let k = ch.constants();
    let points = grid
        .iter()
        .map(|&r| random_coding_exponent(r, &ch).map(|e| (r, e)))
        .collect::<Result<Vec<_>>>()?;
    let omega = points
        .iter()
        .map(|(r, e)| CurvePoint {
            rate: *r,
            value: e.omega_typ,
            branch: e.branch.into(),
        })
        .collect();
    let e0 = points
        .iter()
        .map(|(r, e)| CurvePoint {
            rate: *r,
            value: e.value,
            branch: e.branch.into(),
        })
        .collect();
    Ok(Figure1 {
        meta: Meta::new("figure fig1", ch.p()).with_grid(cfg)?,
        markers: markers(&[("r_x", k.r_x), ("r_crit", k.r_crit)]),
        omega_typ: ExponentCurve::new(ch, BoundId::TypicalWeight, omega)?,
        e0: ExponentCurve::new(ch, BoundId::RandomCoding, e0)?,
    })
}

pub fn figure2(cfg: &RunConfig) -> Result<Figure2> {
    let bounds = composite_output(cfg, "figure fig2")?;
    let t = bounds.thresholds;
    Ok(Figure2 {
        markers: markers(&[("r_x", t.r_x), ("r1", t.r1), ("r_crit", t.r_crit)]),
        bounds,
    })
}

pub fn cmd_figure(cfg: &RunConfig, kind: FigureKind) -> Result<String> {
    match kind {
        FigureKind::Fig1 => {
            let f = figure1(cfg)?;
            match cfg.format {
                OutputFormat::Json => json(&f),
                OutputFormat::Csv => {
                    let mut s = f.meta.csv_line()?;
                    for m in &f.markers {
                        let _ = writeln!(s, "# marker: {}={}", m.name, m.rate);
                    }
                    s.push_str("rate,omega_typ,e0,branch\n");
                    for (w, e) in f.omega_typ.points().iter().zip(f.e0.points()) {
                        let _ = writeln!(s, "{},{},{},{}", w.rate, w.value, e.value, e.branch.as_str());
                    }
                    Ok(s)
                }
            }
        }
        FigureKind::Fig2 => {
            let f = figure2(cfg)?;
            match cfg.format {
                OutputFormat::Json => json(&f),
                OutputFormat::Csv => {
                    let pairs: Vec<(&str, f64)> = f.markers.iter().map(|m| (m.name.as_str(), m.rate)).collect();
                    composite_csv(&f.bounds, &pairs)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub meta: Meta,
    pub report: BoundReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateOutput {
    pub meta: Meta,
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub result: MonteCarlo,
}

fn read_code(path: &Path) -> Result<crate::lab::BinaryCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    load_code(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

pub fn cmd_code(cfg: &RunConfig, path: &Path, sub: CodeCommand) -> Result<String> {
    let ch = cfg.channel()?;
    let code = read_code(path)?;
    let mut meta = Meta::new(
        match sub {
            CodeCommand::Analyze => "code analyze",
            CodeCommand::Simulate => "code simulate",
        },
        ch.p(),
    );
    meta.tie_policy = Some(cfg.tie_policy);
    match sub {
        CodeCommand::Analyze => {
            let out = AnalyzeOutput {
                report: analyze_code(&code, &ch, cfg.tie_policy)?,
                meta,
            };
            match cfg.format {
                OutputFormat::Json => json(&out),
                OutputFormat::Csv => {
                    let mut s = out.meta.csv_line()?;
                    s.push_str("i,exact,log2_exact,union,log2_union,kounias,cohen_merhav,local_spectrum\n");
                    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
                    for c in &out.report.per_codeword {
                        let spectrum: Vec<String> = c.local_spectrum.iter().map(|b| b.to_string()).collect();
                        let _ = writeln!(
                            s,
                            "{},{},{},{},{},{},{},{}",
                            c.i,
                            c.exact,
                            opt(c.log2_exact),
                            c.union,
                            opt(c.log2_union),
                            c.kounias,
                            c.cohen_merhav,
                            spectrum.join(" ")
                        );
                    }
                    let _ = writeln!(s, "# average_exact: {}", out.report.average_exact);
                    Ok(s)
                }
            }
        }
        CodeCommand::Simulate => {
            meta.seed = Some(cfg.seed);
            meta.trials = Some(cfg.trials);
            let out = SimulateOutput {
                n: code.n(),
                m: code.len(),
                result: monte_carlo_error(&code, &ch, cfg.trials, cfg.seed, cfg.tie_policy)?,
                meta,
            };
            match cfg.format {
                OutputFormat::Json => json(&out),
                OutputFormat::Csv => {
                    let mut s = out.meta.csv_line()?;
                    s.push_str("n,M,trials,errors,estimate,std_error\n");
                    let r = &out.result;
                    let _ = writeln!(s, "{},{},{},{},{},{}", out.n, out.m, r.trials, r.errors, r.estimate, r.std_error);
                    Ok(s)
                }
            }
        }
    }
}

/// Writes `text` to `--out` or standard output.
pub fn emit(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.out {
        Some(path) => Ok(std::fs::write(path, text)?),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: f64) -> RunConfig {
        RunConfig {
            p,
            ..RunConfig::default()
        }
    }

    #[test]
    fn validation() {
        assert!(matches!(cfg(0.6).validate(), Err(Error::Config(_))));
        assert!(cfg(0.5).validate().is_err());
        assert!(cfg(0.0).validate().is_err());
        let mut c = cfg(0.08);
        c.r_step = 0.0;
        assert!(c.validate().is_err());
        c.r_step = 0.01;
        c.r_min = Some(0.3);
        c.r_max = Some(0.2);
        assert!(c.validate().is_err());
        c.r_max = Some(0.9);
        assert!(c.validate().is_err());
        assert_eq!(exit_code(&Error::Config(String::new())), 2);
        assert_eq!(exit_code(&Error::NotFound(String::new())), 3);
    }

    #[test]
    fn default_grid_spans_capacity_margin() {
        let c = cfg(0.08);
        let g = c.grid().unwrap();
        let cap = c.channel().unwrap().capacity();
        assert!((g[0] - 1e-3).abs() < 1e-15);
        assert!((g[g.len() - 1] - (cap - 1e-3)).abs() < 1e-12);
    }

    #[test]
    fn e0_csv_layout() {
        let mut c = cfg(0.08);
        c.r_min = Some(0.0);
        c.r_max = Some(0.2);
        c.r_step = 0.05;
        let text = cmd_curve(&c, CurveKind::E0).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# meta: {"));
        assert_eq!(lines.next().unwrap(), "rate,value,branch");
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[0], "0");
        assert!((first[1].parse::<f64>().unwrap() - 0.44096).abs() < 1e-4);
        assert_eq!(first[2], "a");
    }

    #[test]
    fn curve_json_round_trips() {
        let mut c = cfg(0.1);
        c.format = OutputFormat::Json;
        c.r_step = 0.01;
        for kind in [CurveKind::E0, CurveKind::Sphere, CurveKind::UnionExp] {
            let text = cmd_curve(&c, kind).unwrap();
            let back: CurveOutput = serde_json::from_str(&text).unwrap();
            assert_eq!(json(&back).unwrap(), text);
        }
    }
}
