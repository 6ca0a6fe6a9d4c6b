//! Names for the implemented identities.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// One implemented closed-form identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClosedFormId {
    /// P(n, z) through Li_{j+1}(e^{−2πz}).
    PolylogP,
    /// Σ ζ(2k) z^{2k}/(k(k+n)) through Clausen functions.
    ClausenKKPlusN,
    /// Σ ζ(2k) z^{2k}/(k(2k−1+2n)) through Clausen functions.
    ClausenOddShift,
    /// Σ ζ(2k)/(k(k+n)) by odd zeta values.
    UnitKKPlusN,
    /// Σ ζ(2k)/(k(2k−1+2n)) by odd zeta values.
    UnitOddShift,
    /// Σ ζ(2k) 4^{−k}/(k(k+n)) by odd zeta values.
    HalfKKPlusN,
    /// Σ ζ(2k) 4^{−k}/(k(2k−1+2n)) by odd zeta values.
    HalfOddShift,
    /// Σ ζ(2k) z^{2k}/(k(2k+1)) through Cl₂.
    ClausenOddDenominator,
    /// Σ ζ(2k) z^{2k}/(k(k+1)) through Cl₂ and Cl₃.
    ClausenKKPlusOne,
    /// Σ B_{2k} (ln z)^{2k+1}/(k(2k+1)!) through Li₂(z).
    BernoulliLogSeries,
    /// Σ B_{2k} z^{2k+1}/(k(2k+1)!) through Li₂(e^{−z}).
    BernoulliOddSeries,
    /// Σ B_{2k} z^{2k}/(k(2k)!) as a log-sinh.
    BernoulliEvenSeries,
    /// Σ_{k≥0} B_{2k} z^{2k}/(2k)! as z/2 + z/(e^z − 1).
    BernoulliGeneratingFunction,
    /// Σ (−1)^k ζ(2k) z^{2k}/(2k+1) from the z-derivative of P(1, z).
    DerivativeHalfInt,
    /// Σ ζ(2k) z^{2k}/(2k+1) through Cl₂.
    ClausenHalfInt,
    /// Σ (−1)^k ζ(2k) z^{2k}/((k+1)(2k+1)) from integrating P(1, z).
    IntegratedHalfInt,
    /// Σ ζ(2k) z^{2k}/((k+1)(2k+1)) through Cl₂ and Cl₃.
    ClausenHalfIntKPlusOne,
    /// Alternating F_{2k}-weighted P(n, z) through polylogarithms.
    FibonacciPolylog,
    /// Alternating L_{2k}-weighted P(n, z) through polylogarithms.
    LucasPolylog,
    /// Positive F_{2k}-weighted Σ 1/(k(2k+1)) through Cl₂.
    FibonacciOddDenominator,
    /// Positive L_{2k}-weighted Σ 1/(k(2k+1)) through Cl₂.
    LucasOddDenominator,
    /// Positive F_{2k}-weighted Σ 1/(k(k+n)) through Clausen functions.
    FibonacciKKPlusN,
    /// Positive L_{2k}-weighted Σ 1/(k(k+n)) through Clausen functions.
    LucasKKPlusN,
    /// Positive F_{2k}-weighted Σ 1/(k(2k−1+2n)) through Clausen functions.
    FibonacciOddShift,
    /// Positive L_{2k}-weighted Σ 1/(k(2k−1+2n)) through Clausen functions.
    LucasOddShift,
    /// P(m, n, z) through polylogarithms.
    PolylogPmn,
    /// Q(m, z) through Ein and incomplete gamma values.
    IncompleteGammaQ,
    /// Σ ζ(2k)/(k(2k+m)(2k+n)) for m, n of equal parity.
    UnitPmnSameParity,
    /// Σ ζ(2k)/(k(2k+m)(2k+n)) for m, n of opposite parity.
    UnitPmnMixedParity,
    /// P(n, z, p) by reduction to power sums.
    RecursionPpow,
    /// P(m, n, z, p) by reduction to power sums.
    RecursionPmnpow,
    /// Q(m, z, p) by reduction to power sums.
    RecursionQpow,
}

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 32] = [
        ClosedFormId::PolylogP,
        ClosedFormId::ClausenKKPlusN,
        ClosedFormId::ClausenOddShift,
        ClosedFormId::UnitKKPlusN,
        ClosedFormId::UnitOddShift,
        ClosedFormId::HalfKKPlusN,
        ClosedFormId::HalfOddShift,
        ClosedFormId::ClausenOddDenominator,
        ClosedFormId::ClausenKKPlusOne,
        ClosedFormId::BernoulliLogSeries,
        ClosedFormId::BernoulliOddSeries,
        ClosedFormId::BernoulliEvenSeries,
        ClosedFormId::BernoulliGeneratingFunction,
        ClosedFormId::DerivativeHalfInt,
        ClosedFormId::ClausenHalfInt,
        ClosedFormId::IntegratedHalfInt,
        ClosedFormId::ClausenHalfIntKPlusOne,
        ClosedFormId::FibonacciPolylog,
        ClosedFormId::LucasPolylog,
        ClosedFormId::FibonacciOddDenominator,
        ClosedFormId::LucasOddDenominator,
        ClosedFormId::FibonacciKKPlusN,
        ClosedFormId::LucasKKPlusN,
        ClosedFormId::FibonacciOddShift,
        ClosedFormId::LucasOddShift,
        ClosedFormId::PolylogPmn,
        ClosedFormId::IncompleteGammaQ,
        ClosedFormId::UnitPmnSameParity,
        ClosedFormId::UnitPmnMixedParity,
        ClosedFormId::RecursionPpow,
        ClosedFormId::RecursionPmnpow,
        ClosedFormId::RecursionQpow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormId::PolylogP => "polylog_p",
            ClosedFormId::ClausenKKPlusN => "clausen_kk_plus_n",
            ClosedFormId::ClausenOddShift => "clausen_odd_shift",
            ClosedFormId::UnitKKPlusN => "unit_kk_plus_n",
            ClosedFormId::UnitOddShift => "unit_odd_shift",
            ClosedFormId::HalfKKPlusN => "half_kk_plus_n",
            ClosedFormId::HalfOddShift => "half_odd_shift",
            ClosedFormId::ClausenOddDenominator => "clausen_odd_denominator",
            ClosedFormId::ClausenKKPlusOne => "clausen_kk_plus_one",
            ClosedFormId::BernoulliLogSeries => "bernoulli_log_series",
            ClosedFormId::BernoulliOddSeries => "bernoulli_odd_series",
            ClosedFormId::BernoulliEvenSeries => "bernoulli_even_series",
            ClosedFormId::BernoulliGeneratingFunction => "bernoulli_generating_function",
            ClosedFormId::DerivativeHalfInt => "derivative_half_int",
            ClosedFormId::ClausenHalfInt => "clausen_half_int",
            ClosedFormId::IntegratedHalfInt => "integrated_half_int",
            ClosedFormId::ClausenHalfIntKPlusOne => "clausen_half_int_k_plus_one",
            ClosedFormId::FibonacciPolylog => "fibonacci_polylog",
            ClosedFormId::LucasPolylog => "lucas_polylog",
            ClosedFormId::FibonacciOddDenominator => "fibonacci_odd_denominator",
            ClosedFormId::LucasOddDenominator => "lucas_odd_denominator",
            ClosedFormId::FibonacciKKPlusN => "fibonacci_kk_plus_n",
            ClosedFormId::LucasKKPlusN => "lucas_kk_plus_n",
            ClosedFormId::FibonacciOddShift => "fibonacci_odd_shift",
            ClosedFormId::LucasOddShift => "lucas_odd_shift",
            ClosedFormId::PolylogPmn => "polylog_pmn",
            ClosedFormId::IncompleteGammaQ => "incomplete_gamma_q",
            ClosedFormId::UnitPmnSameParity => "unit_pmn_same_parity",
            ClosedFormId::UnitPmnMixedParity => "unit_pmn_mixed_parity",
            ClosedFormId::RecursionPpow => "recursion_ppow",
            ClosedFormId::RecursionPmnpow => "recursion_pmnpow",
            ClosedFormId::RecursionQpow => "recursion_qpow",
        }
    }

    /// The series this identity evaluates, in plain text.
    pub fn formula(self) -> &'static str {
        match self {
            ClosedFormId::PolylogP => "sum (-1)^k zeta(2k) z^2k / (k(2k+n))",
            ClosedFormId::ClausenKKPlusN => "sum zeta(2k) z^2k / (k(k+n))",
            ClosedFormId::ClausenOddShift => "sum zeta(2k) z^2k / (k(2k-1+2n))",
            ClosedFormId::UnitKKPlusN => "sum zeta(2k) / (k(k+n))",
            ClosedFormId::UnitOddShift => "sum zeta(2k) / (k(2k-1+2n))",
            ClosedFormId::HalfKKPlusN => "sum zeta(2k) 4^-k / (k(k+n))",
            ClosedFormId::HalfOddShift => "sum zeta(2k) 4^-k / (k(2k-1+2n))",
            ClosedFormId::ClausenOddDenominator => "sum zeta(2k) z^2k / (k(2k+1))",
            ClosedFormId::ClausenKKPlusOne => "sum zeta(2k) z^2k / (k(k+1))",
            ClosedFormId::BernoulliLogSeries => "sum B_2k (ln z)^(2k+1) / (k(2k+1)!)",
            ClosedFormId::BernoulliOddSeries => "sum B_2k z^(2k+1) / (k(2k+1)!)",
            ClosedFormId::BernoulliEvenSeries => "sum B_2k z^2k / (k(2k)!)",
            ClosedFormId::BernoulliGeneratingFunction => "sum_{k>=0} B_2k z^2k / (2k)!",
            ClosedFormId::DerivativeHalfInt => "sum (-1)^k zeta(2k) z^2k / (2k+1)",
            ClosedFormId::ClausenHalfInt => "sum zeta(2k) z^2k / (2k+1)",
            ClosedFormId::IntegratedHalfInt => "sum (-1)^k zeta(2k) z^2k / ((k+1)(2k+1))",
            ClosedFormId::ClausenHalfIntKPlusOne => "sum zeta(2k) z^2k / ((k+1)(2k+1))",
            ClosedFormId::FibonacciPolylog => "sum (-1)^k F_2k zeta(2k) z^2k / (k(2k+n))",
            ClosedFormId::LucasPolylog => "sum (-1)^k L_2k zeta(2k) z^2k / (k(2k+n))",
            ClosedFormId::FibonacciOddDenominator => "sum F_2k zeta(2k) z^2k / (k(2k+1))",
            ClosedFormId::LucasOddDenominator => "sum L_2k zeta(2k) z^2k / (k(2k+1))",
            ClosedFormId::FibonacciKKPlusN => "sum F_2k zeta(2k) z^2k / (k(k+n))",
            ClosedFormId::LucasKKPlusN => "sum L_2k zeta(2k) z^2k / (k(k+n))",
            ClosedFormId::FibonacciOddShift => "sum F_2k zeta(2k) z^2k / (k(2k-1+2n))",
            ClosedFormId::LucasOddShift => "sum L_2k zeta(2k) z^2k / (k(2k-1+2n))",
            ClosedFormId::PolylogPmn => "sum (-1)^k zeta(2k) z^2k / (k(2k+m)(2k+n))",
            ClosedFormId::IncompleteGammaQ => "sum (-1)^k zeta(2k) z^2k / (k(2k+m)^2)",
            ClosedFormId::UnitPmnSameParity => "sum zeta(2k) / (k(2k+m)(2k+n)), m = n mod 2",
            ClosedFormId::UnitPmnMixedParity => "sum zeta(2k) / (k(2k+m)(2k+n)), m != n mod 2",
            ClosedFormId::RecursionPpow => "sum (-1)^k zeta(2k) z^2k / (k^p(2k+n))",
            ClosedFormId::RecursionPmnpow => "sum (-1)^k zeta(2k) z^2k / (k^p(2k+m)(2k+n))",
            ClosedFormId::RecursionQpow => "sum (-1)^k zeta(2k) z^2k / (k^p(2k+m)^2)",
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClosedFormId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| domain(format!("unknown identity `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_parse_back() {
        let names: HashSet<_> = ClosedFormId::ALL.iter().map(|id| id.name()).collect();
        assert_eq!(names.len(), ClosedFormId::ALL.len());
        for id in ClosedFormId::ALL {
            assert_eq!(id.name().parse::<ClosedFormId>().unwrap(), id);
        }
    }
}
