//! The space of ratios of a sharp fs monoid: charts indexed by face chains,
//! exact gluing between charts, the contraction homotopy, and deterministic
//! sampling.

mod chain;
mod chart;
mod homotopy;
mod sample;

pub use chain::{enumerate_chains, maximal_chains, FaceChain};
pub use chart::{
    canonicalize, chart_coords, chart_distance, in_chart, is_valid_chart_point,
    kernel_positions, points_equal, validate_chart_point, ChartViolation, RatioChartPoint,
    RatioPoint,
};
pub use homotopy::{
    convergence_report, homotopy, level_bounds, level_decomposition_holds, pi_map,
    reference_interior_hom, sections_for_chain, theta, ConvergenceReport, PositiveHom,
};
pub use sample::{
    derive_seed, enumerate_strata, sample_chart_points, sample_interior_homs, Stratum,
};

pub(crate) use sample::stratum_point;
