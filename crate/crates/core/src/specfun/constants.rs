//! High-accuracy constants shared by the closed-form evaluators.
//!
//! Every entry is a decimal literal correct to the last printed digit. The
//! table is plain data so that tests can hand a deliberately corrupted copy
//! to the closed forms and watch the verification fail.

use serde::Serialize;

/// Constants consumed by the closed-form right-hand sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantsTable {
    pub pi: f64,
    pub euler_gamma: f64,
    pub catalan: f64,
    pub ln2: f64,
    /// ln of the golden ratio.
    pub ln_alpha: f64,
    /// ζ(2), ζ(4), …, ζ(30).
    pub zeta_even: [f64; 15],
    /// ζ(3), ζ(5), …, ζ(31).
    pub zeta_odd: [f64; 15],
    /// ψ′(1/3).
    pub trigamma_third: f64,
    /// ψ′(1/8).
    pub trigamma_eighth: f64,
}

#[allow(clippy::excessive_precision, clippy::approx_constant)]
pub static STANDARD: ConstantsTable = ConstantsTable {
    pi: 3.141592653589793238463,
    euler_gamma: 0.5772156649015328606065,
    catalan: 0.9159655941772190150546,
    ln2: 0.6931471805599453094172,
    ln_alpha: 0.4812118250596034474978,
    zeta_even: [
        1.644934066848226436472,
        1.082323233711138191516,
        1.017343061984449139715,
        1.004077356197944339379,
        1.000994575127818085337,
        1.000246086553308048299,
        1.000061248135058704829,
        1.000015282259408651872,
        1.00000381729326499984,
        1.000000953962033872796,
        1.000000238450502727733,
        1.000000059608189051259,
        1.000000014901554828365,
        1.000000003725334024788,
        1.00000000093132743242,
    ],
    zeta_odd: [
        1.2020569031595942854,
        1.036927755143369926331,
        1.00834927738192282684,
        1.002008392826082214418,
        1.000494188604119464559,
        1.000122713347578489147,
        1.000030588236307020494,
        1.000007637197637899762,
        1.000001908212716553939,
        1.000000476932986787806,
        1.000000119219925965311,
        1.000000029803503514652,
        1.000000007450711789835,
        1.000000001862659723513,
        1.000000000465662906503,
    ],
    trigamma_third: 10.09559712542709408179,
    trigamma_eighth: 65.38813344498803447314,
};

/// Largest integer argument covered by the zeta entries.
pub const MAX_TABULATED_ZETA: u32 = 31;

impl ConstantsTable {
    pub fn standard() -> &'static ConstantsTable {
        &STANDARD
    }

    /// ζ(s) from the table, if `2 ≤ s ≤ 31`.
    pub fn zeta(&self, s: u32) -> Option<f64> {
        match s {
            2..=MAX_TABULATED_ZETA if s % 2 == 0 => Some(self.zeta_even[(s / 2 - 1) as usize]),
            3..=MAX_TABULATED_ZETA => Some(self.zeta_odd[((s - 3) / 2) as usize]),
            _ => None,
        }
    }

    /// Mutable access to a tabulated zeta value.
    pub fn zeta_mut(&mut self, s: u32) -> Option<&mut f64> {
        match s {
            2..=MAX_TABULATED_ZETA if s % 2 == 0 => Some(&mut self.zeta_even[(s / 2 - 1) as usize]),
            3..=MAX_TABULATED_ZETA => Some(&mut self.zeta_odd[((s - 3) / 2) as usize]),
            _ => None,
        }
    }
}

impl Default for ConstantsTable {
    fn default() -> Self {
        STANDARD.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{clausen, trigamma, zeta_int};

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let t = ConstantsTable::standard();
        let z2 = t.pi * t.pi / 6.0;
        assert!((t.zeta(2).unwrap() - z2).abs() <= 2.0 * f64::EPSILON * z2);
    }

    #[test]
    fn table_lookup_covers_range() {
        let t = ConstantsTable::standard();
        assert!(t.zeta(1).is_none());
        assert!(t.zeta(32).is_none());
        assert_eq!(t.zeta(3), Some(t.zeta_odd[0]));
        assert_eq!(t.zeta(31), Some(t.zeta_odd[14]));
        assert_eq!(t.zeta(30), Some(t.zeta_even[14]));
    }

    #[test]
    fn entries_reproducible_by_series_operations() {
        let t = ConstantsTable::standard();
        for s in 2..=MAX_TABULATED_ZETA {
            let z = zeta_int(s).unwrap();
            assert!((z.value - t.zeta(s).unwrap()).abs() <= 1e-13, "zeta({s})");
        }
        let g = clausen(2, std::f64::consts::FRAC_PI_2).unwrap();
        assert!((g.value - t.catalan).abs() <= 1e-13);
        assert!((trigamma(1.0 / 3.0).unwrap().value - t.trigamma_third).abs() <= 1e-13);
        assert!((trigamma(0.125).unwrap().value - t.trigamma_eighth).abs() <= 1e-13);
        assert!((2f64.ln() - t.ln2).abs() <= 1e-15);
        let alpha = 0.5 * (1.0 + 5f64.sqrt());
        assert!((alpha.ln() - t.ln_alpha).abs() <= 1e-15);
    }
}
