//! Nested optimizations behind the lower and upper reliability bounds.

pub mod burnashev;
pub mod envelope;
pub mod minimax;
pub mod thresholds;

pub use burnashev::{burnashev_b, burnashev_b_with, EtaSearch};
pub use envelope::{reliability_bounds, straight_line_envelope, ReliabilityBounds, Segment};
pub use minimax::{thm1_exponent, thm1_exponent_with, Dominant, IntersectionProfile, MinimaxGrid, MinimaxPoint};
pub use thresholds::{
    find_r0, find_r0_with, find_r1, new_a, new_b, tangency_check, thm4_upper, JplUpperBound, TangencyGaps, ThresholdReport,
    UpperPoint,
};
