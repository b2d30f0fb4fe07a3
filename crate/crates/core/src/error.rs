//! Error type shared by every module of the crate.

use std::io;

/// Everything that can go wrong while evaluating a bound or analysing a code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A scalar argument fell outside the domain of the function.
    #[error("{what} = {value} is outside the admissible domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// The rate exceeds the capacity `1 - h(p)` of the channel.
    #[error("rate {rate} exceeds channel capacity {capacity}")]
    RateAboveCapacity { rate: f64, capacity: f64 },

    /// No feasible `alpha` exists for the requested rate.
    #[error("no feasible alpha exists at rate {0}")]
    InfeasibleRate(f64),

    /// A feasibility constraint between parameters is violated.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// The value lies outside the image of a monotone map being inverted.
    #[error("{what} = {value} is outside the achievable range ({lo}, {hi})")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// The eta interval of the conditional slice exponent is empty.
    #[error("empty eta interval for omega = {omega}, lambda = {lambda}: [{lo}, {hi}]")]
    EmptyEtaInterval {
        omega: f64,
        lambda: f64,
        lo: f64,
        hi: f64,
    },

    /// The Hahn exponent integrand left its validity range.
    #[error("negative discriminant {value} at y = {y}; omega exceeds the validity range")]
    NegativeDiscriminant { y: f64, value: f64 },

    /// The straight-line construction has no valid geometry.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A threshold search found no crossing.
    #[error("not found: {0}")]
    NotFound(String),

    /// A line of a code file could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The same word occurs twice in a code.
    #[error("line {line}: duplicate codeword (first seen on line {first})")]
    DuplicateWord { line: usize, first: usize },

    /// Code files must contain at least one word.
    #[error("code contains no codewords")]
    EmptyCode,

    /// An exhaustive operation was asked to enumerate too much.
    #[error("{what} = {value} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// A codeword index is out of range.
    #[error("codeword index {index} out of range for a code with {size} words")]
    BadIndex { index: usize, size: usize },

    /// Cohen-Merhav needs at least one neighbor at the requested distance.
    #[error("codeword {index} has no neighbor at distance {w}")]
    NoNeighborAtDistance { index: usize, w: usize },

    /// The three words handed to the slice computation are not equidistant.
    #[error("distance mismatch: d(x_i,x_j) = {dij}, d(x_i,x_k) = {dik}")]
    DistanceMismatch { dij: usize, dik: usize },

    /// The slice of equidistant received words is empty.
    #[error("empty slice: {0}")]
    EmptySlice(String),

    /// A run configuration failed validation.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than a failed computation.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::NotFound(_) | Error::Geometry(_) | Error::NegativeDiscriminant { .. }
        )
    }

    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
