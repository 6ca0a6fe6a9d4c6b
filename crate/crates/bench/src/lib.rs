//! Shared inputs for the benchmarks.

use zetaseries_core::oracle::{Family, SeriesSpec, SignConvention};

/// One series from each major family, at arguments where the oracle takes
/// its slow path (|z| near 1) and its fast path (small |z|).
pub fn representative_specs() -> Vec<(&'static str, SeriesSpec)> {
    use SignConvention::{Alternating as Alt, Positive as Pos};
    vec![
        ("P_n1_z1", SeriesSpec::p(1, 1.0, Alt)),
        ("P_n3_z0.25", SeriesSpec::p(3, 0.25, Alt)),
        ("KKPlusN_n2_z0.95", SeriesSpec::new(Family::KKPlusN, 0.95, Pos).with_n(2)),
        ("Pmn_m1_n4_z0.5", SeriesSpec::new(Family::Pmn, 0.5, Alt).with_m(1).with_n(4)),
        ("Q_m2_z1", SeriesSpec::new(Family::Q, 1.0, Alt).with_m(2)),
        ("FibP_n2_z0.5", SeriesSpec::new(Family::FibP, 0.5, Alt).with_n(2)),
        ("BernoulliGenerating_z3", SeriesSpec::new(Family::BernoulliGenerating, 3.0, Pos)),
        ("Qpow_m2_p3_z0.5", SeriesSpec::new(Family::Qpow, 0.5, Alt).with_m(2).with_p(3)),
    ]
}

/// Angles spread over one period, avoiding the singular point 0.
pub fn clausen_angles() -> Vec<f64> {
    (1..16).map(|i| i as f64 * std::f64::consts::TAU / 16.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_are_valid() {
        for (name, spec) in representative_specs() {
            assert!(spec.validate().is_ok(), "{name}");
        }
        assert!(clausen_angles().iter().all(|t| *t > 0.0 && *t < std::f64::consts::TAU));
    }
}
