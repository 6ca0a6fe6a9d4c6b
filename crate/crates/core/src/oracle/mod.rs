//! Independent brute-force evaluation of the series on the left-hand sides.
//!
//! Nothing here calls into [`crate::closedform`]; the two sides of every
//! identity are computed by unrelated code paths. Series are summed
//! directly with a geometric tail bound when |z| < 0.95 and Kummer split
//! above that, with CVZ acceleration or Euler–Maclaurin on the slowly
//! converging part.

mod dilog;
mod engine;
mod euler_maclaurin;
mod spec;
mod weight;

pub use crate::acceleration::{cvz_accelerate, cvz_count_for};
pub use dilog::dilog_sum;
pub use engine::{
    partial_sum, sum_series, sum_series_with_budget, weight_for, zeta_rational_sum, SummationBudget,
    BERNOULLI_DIRECT_BELOW, KUMMER_THRESHOLD,
};
pub use euler_maclaurin::em_sum;
pub use spec::{Family, SeriesSpec, SignConvention};
pub use weight::{LinearFactor, RationalWeight, JET_LEN};
