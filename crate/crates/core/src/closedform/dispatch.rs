//! Mapping series instances onto the identity that evaluates them.
//!
//! An identity often covers several series: the k(k+n) denominators are
//! P(2n, ·) up to a factor of two, the Fibonacci right-hand sides carry a
//! √5, and so on. [`ClosedForms::eval_identity`] applies those factors so
//! the result is always the value of the series named by the `SeriesSpec`.

use crate::error::{domain, Error, Result};
use crate::evaluation::Evaluation;
use crate::oracle::{Family, SeriesSpec, SignConvention};
use crate::sequences::BINET;

use super::{
    BernoulliKind, ClosedFormId, ClosedForms, DerivativeKind, FibonacciKind, SimpleClausenKind, UnitPoint,
    DEFAULT_Q_BUDGET,
};

use Family as F;
use SignConvention::{Alternating as Alt, Positive as Pos};

impl ClosedForms<'_> {
    /// The identity used by [`ClosedForms::eval_spec`] for this series.
    pub fn identity_for(spec: &SeriesSpec) -> Result<ClosedFormId> {
        use ClosedFormId as Id;
        let n = spec.n.unwrap_or(0);
        let id = match (spec.family, spec.sign) {
            (F::P | F::S1 | F::S2, Alt) => Id::PolylogP,
            (F::KKPlusN, Alt) => Id::PolylogP,
            (F::P, Pos) if n == 1 => Id::ClausenOddDenominator,
            (F::P, Pos) if n % 2 == 0 => Id::ClausenKKPlusN,
            (F::P, Pos) => Id::ClausenOddShift,
            (F::KKPlusN, Pos) => Id::ClausenKKPlusN,
            (F::Pmn, Alt) => Id::PolylogPmn,
            (F::Pmn, Pos) if spec.z.abs() == 1.0 => {
                if spec.m.unwrap_or(0) % 2 == n % 2 {
                    Id::UnitPmnSameParity
                } else {
                    Id::UnitPmnMixedParity
                }
            }
            (F::Q | F::S3, Alt) => Id::IncompleteGammaQ,
            (F::Ppow, Alt) => Id::RecursionPpow,
            (F::Pmnpow, Alt) => Id::RecursionPmnpow,
            (F::Qpow, Alt) => Id::RecursionQpow,
            (F::HalfInt, Alt) => Id::DerivativeHalfInt,
            (F::HalfInt, Pos) => Id::ClausenHalfInt,
            (F::HalfIntKPlusOne, Alt) => Id::IntegratedHalfInt,
            (F::HalfIntKPlusOne, Pos) => Id::ClausenHalfIntKPlusOne,
            (F::BernoulliLog, _) => Id::BernoulliLogSeries,
            (F::BernoulliOdd, _) => Id::BernoulliOddSeries,
            (F::BernoulliEven, _) => Id::BernoulliEvenSeries,
            (F::BernoulliGenerating, _) => Id::BernoulliGeneratingFunction,
            (F::FibP | F::FibKKPlusN, Alt) => Id::FibonacciPolylog,
            (F::LucP | F::LucKKPlusN, Alt) => Id::LucasPolylog,
            (F::FibP, Pos) if n == 1 => Id::FibonacciOddDenominator,
            (F::LucP, Pos) if n == 1 => Id::LucasOddDenominator,
            (F::FibP, Pos) if n % 2 == 1 => Id::FibonacciOddShift,
            (F::LucP, Pos) if n % 2 == 1 => Id::LucasOddShift,
            (F::FibP | F::FibKKPlusN, Pos) => Id::FibonacciKKPlusN,
            (F::LucP | F::LucKKPlusN, Pos) => Id::LucasKKPlusN,
            _ => {
                return Err(Error::NoClosedForm(format!(
                    "no identity covers {} with {:?} sign",
                    spec.family, spec.sign
                )))
            }
        };
        Ok(id)
    }

    /// Closed-form value of the series described by `spec`.
    ///
    /// # Example
    /// ```
    /// use zetaseries_core::closedform::ClosedForms;
    /// use zetaseries_core::oracle::{Family, SeriesSpec, SignConvention};
    /// let spec = SeriesSpec::new(Family::KKPlusN, 1.0, SignConvention::Positive).with_n(1);
    /// let v = ClosedForms::standard().eval_spec(&spec).unwrap();
    /// assert!((v.value - ((2.0 * std::f64::consts::PI).ln() - 0.5)).abs() < 1e-14);
    /// ```
    pub fn eval_spec(&self, spec: &SeriesSpec) -> Result<Evaluation> {
        self.eval_identity(Self::identity_for(spec)?, spec)
    }

    /// Value of the series `spec` computed through the identity `id`.
    /// Fails if the identity does not cover that series.
    pub fn eval_identity(&self, id: ClosedFormId, spec: &SeriesSpec) -> Result<Evaluation> {
        use ClosedFormId as Id;
        spec.validate()?;
        let z = spec.z;
        let sqrt5 = BINET.sqrt5;
        let mismatch = || {
            Error::NoClosedForm(format!(
                "identity {id} does not cover {} with {:?} sign and n={:?}, m={:?}, z={}",
                spec.family, spec.sign, spec.n, spec.m, spec.z
            ))
        };
        let n = || spec.need_n();
        let m = || spec.need_m();
        let unit = |which: UnitPoint| -> Result<()> {
            if spec.z.abs() == which.z() {
                Ok(())
            } else {
                Err(mismatch())
            }
        };

        match (id, spec.family, spec.sign) {
            (Id::PolylogP, F::P, Alt) => self.eval_p(n()?, z),
            (Id::PolylogP, F::KKPlusN, Alt) => Ok(self.eval_p(2 * n()?, z)? * 2.0),
            (Id::PolylogP, F::S1, Alt) => self.eval_power_sum(1, z),
            (Id::PolylogP, F::S2, Alt) => self.eval_s2(n()?, z),

            (Id::ClausenKKPlusN, F::KKPlusN, Pos) => Ok(self.eval_even_halfint(n()?, z)?.0),
            (Id::ClausenKKPlusN, F::P, Pos) if n()? % 2 == 0 => Ok(self.eval_even_halfint(n()? / 2, z)?.0 * 0.5),
            (Id::ClausenOddShift, F::P, Pos) if n()? % 2 == 1 => Ok(self.eval_even_halfint(n()?.div_ceil(2), z)?.1),

            (Id::UnitKKPlusN | Id::HalfKKPlusN, F::KKPlusN, Pos) => {
                let which = unit_point(id);
                unit(which)?;
                Ok(self.eval_unit_grids(n()?, which)?.0)
            }
            (Id::UnitKKPlusN | Id::HalfKKPlusN, F::P, Pos) if n()? % 2 == 0 => {
                let which = unit_point(id);
                unit(which)?;
                Ok(self.eval_unit_grids(n()? / 2, which)?.0 * 0.5)
            }
            (Id::UnitOddShift | Id::HalfOddShift, F::P, Pos) if n()? % 2 == 1 => {
                let which = unit_point(id);
                unit(which)?;
                Ok(self.eval_unit_grids(n()?.div_ceil(2), which)?.1)
            }

            (Id::ClausenOddDenominator, F::P, Pos) if n()? == 1 => self.eval_t6(z, SimpleClausenKind::OddDenominator),
            (Id::ClausenKKPlusOne, F::KKPlusN, Pos) if n()? == 1 => self.eval_t6(z, SimpleClausenKind::KKPlusOne),
            (Id::ClausenKKPlusOne, F::P, Pos) if n()? == 2 => Ok(self.eval_t6(z, SimpleClausenKind::KKPlusOne)? * 0.5),

            (Id::BernoulliLogSeries, F::BernoulliLog, _) => self.eval_bernoulli_family(z, BernoulliKind::LogSeries),
            (Id::BernoulliOddSeries, F::BernoulliOdd, _) => self.eval_bernoulli_family(z, BernoulliKind::OddSeries),
            (Id::BernoulliEvenSeries, F::BernoulliEven, _) => self.eval_bernoulli_family(z, BernoulliKind::EvenSeries),
            (Id::BernoulliGeneratingFunction, F::BernoulliGenerating, _) => {
                self.eval_bernoulli_family(z, BernoulliKind::GeneratingFunction)
            }

            (Id::DerivativeHalfInt, F::HalfInt, Alt) => {
                Ok(-self.eval_deriv_family(z, DerivativeKind::AlternatingHalfInt)?.value)
            }
            (Id::ClausenHalfInt, F::HalfInt, Pos) => {
                Ok(self.eval_deriv_family(z, DerivativeKind::PositiveHalfInt)?.value)
            }
            (Id::IntegratedHalfInt, F::HalfIntKPlusOne, Alt) => {
                Ok(-self.eval_deriv_family(z, DerivativeKind::AlternatingHalfIntKPlusOne)?.value)
            }
            (Id::ClausenHalfIntKPlusOne, F::HalfIntKPlusOne, Pos) => {
                Ok(self.eval_deriv_family(z, DerivativeKind::PositiveHalfIntKPlusOne)?.value)
            }

            (Id::FibonacciPolylog, F::FibP, Alt) => {
                Ok(-(self.eval_fibonacci_family(n()?, z, FibonacciKind::FibonacciPolylog)? / sqrt5))
            }
            (Id::FibonacciPolylog, F::FibKKPlusN, Alt) => {
                Ok(self.eval_fibonacci_family(2 * n()?, z, FibonacciKind::FibonacciPolylog)? * (-2.0 / sqrt5))
            }
            (Id::LucasPolylog, F::LucP, Alt) => {
                Ok(-self.eval_fibonacci_family(n()?, z, FibonacciKind::LucasPolylog)?)
            }
            (Id::LucasPolylog, F::LucKKPlusN, Alt) => {
                Ok(self.eval_fibonacci_family(2 * n()?, z, FibonacciKind::LucasPolylog)? * -2.0)
            }
            (Id::FibonacciOddDenominator, F::FibP, Pos) if n()? == 1 => {
                self.eval_fibonacci_family(1, z, FibonacciKind::FibonacciOddDenominator)
            }
            (Id::LucasOddDenominator, F::LucP, Pos) if n()? == 1 => {
                self.eval_fibonacci_family(1, z, FibonacciKind::LucasOddDenominator)
            }
            (Id::FibonacciKKPlusN, F::FibKKPlusN, Pos) => {
                Ok(self.eval_fibonacci_family(n()?, z, FibonacciKind::FibonacciKKPlusN)? * (2.0 / sqrt5))
            }
            (Id::FibonacciKKPlusN, F::FibP, Pos) if n()? % 2 == 0 => {
                Ok(self.eval_fibonacci_family(n()? / 2, z, FibonacciKind::FibonacciKKPlusN)? / sqrt5)
            }
            (Id::LucasKKPlusN, F::LucKKPlusN, Pos) => {
                Ok(self.eval_fibonacci_family(n()?, z, FibonacciKind::LucasKKPlusN)? * 2.0)
            }
            (Id::LucasKKPlusN, F::LucP, Pos) if n()? % 2 == 0 => {
                self.eval_fibonacci_family(n()? / 2, z, FibonacciKind::LucasKKPlusN)
            }
            (Id::FibonacciOddShift, F::FibP, Pos) if n()? % 2 == 1 => {
                Ok(self.eval_fibonacci_family(n()?.div_ceil(2), z, FibonacciKind::FibonacciOddShift)? / sqrt5)
            }
            (Id::LucasOddShift, F::LucP, Pos) if n()? % 2 == 1 => {
                self.eval_fibonacci_family(n()?.div_ceil(2), z, FibonacciKind::LucasOddShift)
            }

            (Id::PolylogPmn, F::Pmn, Alt) => Ok(-self.eval_pmn(m()?, n()?, z)?),
            (Id::IncompleteGammaQ, F::Q, Alt) => Ok(-self.eval_q(m()?, z, DEFAULT_Q_BUDGET)?),
            (Id::IncompleteGammaQ, F::S3, Alt) => self.eval_s3(m()?, z),
            (Id::UnitPmnSameParity, F::Pmn, Pos) if m()? % 2 == n()? % 2 => {
                unit(UnitPoint::One)?;
                self.eval_pmn_unit(m()?, n()?)
            }
            (Id::UnitPmnMixedParity, F::Pmn, Pos) if m()? % 2 != n()? % 2 => {
                unit(UnitPoint::One)?;
                self.eval_pmn_unit(m()?, n()?)
            }

            (Id::RecursionPpow | Id::RecursionPmnpow | Id::RecursionQpow, family, Alt)
                if family == recursion_family(id) =>
            {
                self.eval_general_p(spec)
            }

            _ => Err(mismatch()),
        }
    }
}

fn unit_point(id: ClosedFormId) -> UnitPoint {
    match id {
        ClosedFormId::HalfKKPlusN | ClosedFormId::HalfOddShift => UnitPoint::Half,
        _ => UnitPoint::One,
    }
}

fn recursion_family(id: ClosedFormId) -> Family {
    match id {
        ClosedFormId::RecursionPmnpow => Family::Pmnpow,
        ClosedFormId::RecursionQpow => Family::Qpow,
        _ => Family::Ppow,
    }
}

/// Convenience wrapper around [`ClosedForms::eval_spec`] with the built-in constants.
pub fn closed_form(spec: &SeriesSpec) -> Result<Evaluation> {
    if spec.family == Family::DilogSum {
        return Err(domain("DilogSum has no closed form; use the oracle"));
    }
    ClosedForms::standard().eval_spec(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn spec(family: Family, sign: SignConvention, z: f64) -> SeriesSpec {
        SeriesSpec::new(family, z, sign)
    }

    #[test]
    fn k_k_plus_n_routes_agree() {
        let cf = ClosedForms::standard();
        let s = spec(F::KKPlusN, Pos, 1.0).with_n(2);
        let a = cf.eval_identity(ClosedFormId::ClausenKKPlusN, &s).unwrap().value;
        let b = cf.eval_identity(ClosedFormId::UnitKKPlusN, &s).unwrap().value;
        assert!((a - b).abs() < 1e-13);
        let p = spec(F::P, Pos, 1.0).with_n(4);
        let c = cf.eval_spec(&p).unwrap().value;
        assert!((2.0 * c - a).abs() < 1e-13);
    }

    #[test]
    fn unit_identity_rejects_other_arguments() {
        let cf = ClosedForms::standard();
        let s = spec(F::KKPlusN, Pos, 0.3).with_n(2);
        assert!(matches!(cf.eval_identity(ClosedFormId::UnitKKPlusN, &s), Err(Error::NoClosedForm(_))));
        let s = spec(F::KKPlusN, Pos, 0.5).with_n(1);
        let v = cf.eval_identity(ClosedFormId::HalfKKPlusN, &s).unwrap().value;
        assert!((v - (PI.ln() - 0.5 - 7.0 * 1.202_056_903_159_594_3 / (2.0 * PI * PI))).abs() < 1e-14);
    }

    #[test]
    fn uncovered_series_are_reported() {
        let cf = ClosedForms::standard();
        let s = spec(F::DilogSum, Alt, 0.5).with_p(2);
        assert!(matches!(cf.eval_spec(&s), Err(Error::NoClosedForm(_))));
        let s = spec(F::Pmn, Pos, 0.5).with_m(1).with_n(2);
        assert!(matches!(cf.eval_spec(&s), Err(Error::NoClosedForm(_))));
        let s = spec(F::Q, Pos, 0.5).with_m(1);
        assert!(closed_form(&s).is_err());
    }

    #[test]
    fn example_six_value() {
        let v = closed_form(&spec(F::HalfIntKPlusOne, Pos, 1.0)).unwrap();
        assert!((v.value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn every_identity_has_a_default_route() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        let specs = [
            spec(F::P, Alt, 0.5).with_n(1),
            spec(F::P, Pos, 0.5).with_n(1),
            spec(F::P, Pos, 0.5).with_n(2),
            spec(F::P, Pos, 0.5).with_n(3),
            spec(F::Pmn, Alt, 0.5).with_m(1).with_n(2),
            spec(F::Pmn, Pos, 1.0).with_m(1).with_n(3),
            spec(F::Pmn, Pos, 1.0).with_m(2).with_n(3),
            spec(F::Q, Alt, 0.5).with_m(1),
            spec(F::Ppow, Alt, 0.5).with_n(1).with_p(2),
            spec(F::Pmnpow, Alt, 0.5).with_m(1).with_n(2).with_p(2),
            spec(F::Qpow, Alt, 0.5).with_m(1).with_p(2),
            spec(F::HalfInt, Alt, 0.5),
            spec(F::HalfInt, Pos, 0.5),
            spec(F::HalfIntKPlusOne, Alt, 0.5),
            spec(F::HalfIntKPlusOne, Pos, 0.5),
            spec(F::BernoulliLog, Pos, 0.5),
            spec(F::BernoulliOdd, Pos, 0.5),
            spec(F::BernoulliEven, Pos, 0.5),
            spec(F::BernoulliGenerating, Pos, 0.5),
            spec(F::FibP, Alt, 0.5).with_n(1),
            spec(F::LucP, Alt, 0.5).with_n(1),
            spec(F::FibP, Pos, 0.5).with_n(1),
            spec(F::LucP, Pos, 0.5).with_n(1),
            spec(F::FibP, Pos, 0.5).with_n(2),
            spec(F::LucP, Pos, 0.5).with_n(2),
            spec(F::FibP, Pos, 0.5).with_n(3),
            spec(F::LucP, Pos, 0.5).with_n(3),
        ];
        let cf = ClosedForms::standard();
        for s in specs {
            let id = ClosedForms::identity_for(&s).unwrap();
            cf.eval_identity(id, &s).unwrap_or_else(|e| panic!("{s}: {e}"));
            seen.insert(id);
        }
        // Unit/half grids and the n = 1 Clausen-only form are reached through
        // explicit identity selection.
        for id in [
            ClosedFormId::UnitKKPlusN,
            ClosedFormId::UnitOddShift,
            ClosedFormId::HalfKKPlusN,
            ClosedFormId::HalfOddShift,
            ClosedFormId::ClausenKKPlusOne,
        ] {
            seen.insert(id);
        }
        assert_eq!(seen.len(), ClosedFormId::ALL.len());
    }
}
