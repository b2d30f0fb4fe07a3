//! Finite-length codes: exact ML error probabilities, their bounds and simulation.

pub mod bounds;
pub mod code;
pub mod exact;
pub mod monte_carlo;
pub mod report;
pub mod slice;

pub use bounds::{
    cohen_merhav_bound, kounias_bound, union_bound, union_bound_log2, CohenMerhav, PairRule, SubsetRule, Weight,
};
pub use code::{
    distance, linear_code, load_code, local_distance_distribution, random_linear_code, weight_distribution,
    BinaryCode, CodeOrigin, MAX_LINEAR_K, MAX_N,
};
pub use exact::{
    exact_error_probability, log2_bsc_weight, pairwise_pi, pairwise_pi_log2, ErrorCensus, ExactError, TiePolicy,
    MAX_EXACT_N,
};
pub use monte_carlo::{monte_carlo_error, MonteCarlo, MAX_MC_WORDS};
pub use report::{analyze_code, load_report, save_report, BoundReport, CodewordBounds, REPORT_WEIGHTS};
pub use slice::{slice_probabilities, slice_probabilities_from_distances, slice_radius, SliceProbabilities};
