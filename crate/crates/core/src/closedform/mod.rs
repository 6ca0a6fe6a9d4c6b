//! Closed-form right-hand sides of the rational zeta series identities.
//!
//! Every evaluator is built from logarithms, polylogarithms, Clausen
//! functions, incomplete gamma values and the constants in a
//! [`ConstantsTable`], and returns an [`Evaluation`] whose bound collects
//! the bounds of its ingredients. Which series each evaluator represents is
//! stated in its documentation; [`ClosedForms::eval_spec`] maps a
//! [`SeriesSpec`](crate::oracle::SeriesSpec) onto the matching evaluator with any sign or scale
//! adjustment.
//!
//! Only the branch-sensitive derivative identities use complex arithmetic;
//! everything else works with real values.

mod bernoulli;
mod clausen_forms;
mod derivative;
mod dispatch;
mod fibonacci;
mod general;
mod id;
mod polylog_forms;
mod unit_values;

use crate::error::Result;
use crate::evaluation::{Evaluation, EPS};
use crate::specfun::{clausen, polylog, zeta_int, ConstantsTable};

pub use bernoulli::BernoulliKind;
pub use clausen_forms::SimpleClausenKind;
pub use derivative::{BranchedEvaluation, DerivativeKind, PINNED_BRANCH};
pub use dispatch::closed_form;
pub use fibonacci::FibonacciKind;
pub use id::ClosedFormId;
pub use polylog_forms::DEFAULT_Q_BUDGET;
pub use unit_values::UnitPoint;

/// Closed-form evaluators bound to a table of constants.
#[derive(Debug, Clone, Copy)]
pub struct ClosedForms<'a> {
    consts: &'a ConstantsTable,
}

impl ClosedForms<'static> {
    /// Evaluators using the built-in constants.
    pub fn standard() -> Self {
        Self { consts: ConstantsTable::standard() }
    }
}

impl<'a> ClosedForms<'a> {
    /// Evaluators using a caller-supplied table, e.g. a corrupted copy in a
    /// failure-path test.
    pub fn with_constants(consts: &'a ConstantsTable) -> Self {
        Self { consts }
    }

    pub fn constants(&self) -> &ConstantsTable {
        self.consts
    }

    fn pi(&self) -> f64 {
        self.consts.pi
    }

    /// 2π·z with its rounding error.
    fn two_pi(&self, z: f64) -> Evaluation {
        Evaluation::rounded(2.0 * self.pi() * z)
    }

    /// ζ(s) from the table, or computed for arguments beyond it.
    fn zeta(&self, s: u32) -> Result<Evaluation> {
        match self.consts.zeta(s) {
            Some(v) => Ok(Evaluation::new(v, EPS * v, 0)),
            None => zeta_int(s),
        }
    }

    /// Cl_n(θ) with the effect of a rounded θ added to the bound.
    fn cl(&self, n: u32, theta: f64) -> Result<Evaluation> {
        let c = clausen(n, theta)?;
        // |Cl_n′| ≤ ζ(n−1) for n ≥ 3 and ≤ |ln|θ|| + 2 for n = 2 near 0.
        let slope = if n >= 3 { 2.0 } else { 2.0 + theta.abs().max(1e-300).ln().abs() };
        Ok(c.widen(2.0 * EPS * theta.abs() * slope))
    }

    /// Li_s(e^{−y}) for y > 0, widening the bound for the rounded exponential.
    fn li_exp(&self, s: u32, y: f64) -> Result<Evaluation> {
        let x = (-y).exp();
        let v = polylog(s, x)?;
        // x·Li_s′(x) = Li_{s−1}(x) ≤ x/(1−x)
        let slope = x / (1.0 - x);
        Ok(v.widen(2.0 * EPS * (1.0 + y) * slope))
    }
}

/// n! as a float; exact for n ≤ 22.
pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// (−1)^j as a float.
pub(crate) fn parity_sign(j: i64) -> f64 {
    if j.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// e^j for integer j of either sign, with the relative error scaled by |j|.
pub(crate) fn powi(e: Evaluation, j: i32) -> Evaluation {
    let v = e.value.powi(j);
    let rel = e.err_bound / e.value.abs();
    let n = j.unsigned_abs() as f64;
    Evaluation::new(v, v.abs() * (n * rel * (1.0 + n * rel) + (n + 1.0) * EPS), e.terms_used)
}

/// Rejects z outside 0 < |z| ≤ `limit`.
pub(crate) fn check_z(z: f64, limit: f64, what: &str) -> Result<()> {
    if !z.is_finite() || z == 0.0 || z.abs() > limit * (1.0 + 1e-12) {
        return Err(crate::error::domain(format!("{what} needs 0 < |z| <= {limit}, got {z}")));
    }
    Ok(())
}
