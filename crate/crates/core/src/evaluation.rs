//! Numeric results paired with a guaranteed absolute error bound.
//!
//! Arithmetic on [`Evaluation`] propagates the bounds of its operands and
//! adds one rounding error per operation, so closed forms assembled from
//! several special-function values carry an honest combined bound.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::summation::CompensatedSum;

pub(crate) const EPS: f64 = f64::EPSILON;

/// A real value, an absolute error bound, and the number of terms or
/// quadrature nodes that went into it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: f64,
    pub err_bound: f64,
    pub terms_used: usize,
}

impl Evaluation {
    pub fn new(value: f64, err_bound: f64, terms_used: usize) -> Self {
        debug_assert!(err_bound >= 0.0, "negative error bound {err_bound}");
        Self { value, err_bound, terms_used }
    }

    /// A value known exactly.
    pub fn exact(value: f64) -> Self {
        Self::new(value, 0.0, 0)
    }

    /// A value carrying a single rounding error, e.g. the result of a libm call.
    pub fn rounded(value: f64) -> Self {
        Self::new(value, 2.0 * EPS * value.abs(), 0)
    }

    /// `ln(x)` for a positive argument, with the rounding of both the
    /// argument and the logarithm folded into the bound.
    pub fn ln_of(x: f64) -> Self {
        let v = x.ln();
        Self::new(v, 2.0 * EPS * (v.abs() + 1.0), 0)
    }

    pub fn with_terms(mut self, terms_used: usize) -> Self {
        self.terms_used = terms_used;
        self
    }

    pub fn widen(mut self, extra: f64) -> Self {
        self.err_bound += extra.abs();
        self
    }

    /// Natural logarithm with first-order error propagation.
    pub fn ln(self) -> Self {
        let v = self.value.ln();
        let rel = self.err_bound / (self.value.abs() - self.err_bound).max(f64::MIN_POSITIVE);
        Self::new(v, rel + 2.0 * EPS * (v.abs() + 1.0), self.terms_used)
    }

    /// Compensated sum of evaluations; the bounds add, plus the rounding of the sum.
    pub fn sum<I: IntoIterator<Item = Evaluation>>(items: I) -> Self {
        let mut acc = CompensatedSum::new();
        let mut err = 0.0;
        let mut terms = 0;
        for e in items {
            acc.add(e.value);
            err += e.err_bound;
            terms += e.terms_used;
        }
        Self::new(acc.value(), err + acc.rounding_bound(), terms)
    }

    /// True when `other` lies within the combined bounds of both values.
    pub fn agrees_with(&self, other: &Evaluation) -> bool {
        (self.value - other.value).abs() <= self.err_bound + other.err_bound
    }
}

impl Add for Evaluation {
    type Output = Evaluation;
    fn add(self, rhs: Evaluation) -> Evaluation {
        let v = self.value + rhs.value;
        Evaluation::new(v, self.err_bound + rhs.err_bound + EPS * v.abs(), self.terms_used + rhs.terms_used)
    }
}

impl Sub for Evaluation {
    type Output = Evaluation;
    fn sub(self, rhs: Evaluation) -> Evaluation {
        self + (-rhs)
    }
}

impl Neg for Evaluation {
    type Output = Evaluation;
    fn neg(self) -> Evaluation {
        Evaluation { value: -self.value, ..self }
    }
}

impl Add<f64> for Evaluation {
    type Output = Evaluation;
    fn add(self, rhs: f64) -> Evaluation {
        self + Evaluation::exact(rhs)
    }
}

impl Sub<f64> for Evaluation {
    type Output = Evaluation;
    fn sub(self, rhs: f64) -> Evaluation {
        self + Evaluation::exact(-rhs)
    }
}

impl Mul<f64> for Evaluation {
    type Output = Evaluation;
    fn mul(self, rhs: f64) -> Evaluation {
        let v = self.value * rhs;
        Evaluation::new(v, self.err_bound * rhs.abs() + EPS * v.abs(), self.terms_used)
    }
}

impl Div<f64> for Evaluation {
    type Output = Evaluation;
    fn div(self, rhs: f64) -> Evaluation {
        let v = self.value / rhs;
        Evaluation::new(v, self.err_bound / rhs.abs() + EPS * v.abs(), self.terms_used)
    }
}

impl Mul for Evaluation {
    type Output = Evaluation;
    fn mul(self, rhs: Evaluation) -> Evaluation {
        let v = self.value * rhs.value;
        let err = self.value.abs() * rhs.err_bound
            + rhs.value.abs() * self.err_bound
            + self.err_bound * rhs.err_bound
            + EPS * v.abs();
        Evaluation::new(v, err, self.terms_used + rhs.terms_used)
    }
}

impl Div for Evaluation {
    type Output = Evaluation;
    fn div(self, rhs: Evaluation) -> Evaluation {
        let v = self.value / rhs.value;
        let denom = (rhs.value.abs() - rhs.err_bound).max(f64::MIN_POSITIVE);
        let err = (self.err_bound + v.abs() * rhs.err_bound) / denom + EPS * v.abs();
        Evaluation::new(v, err, self.terms_used + rhs.terms_used)
    }
}

impl From<f64> for Evaluation {
    fn from(value: f64) -> Self {
        Evaluation::exact(value)
    }
}

/// Complex counterpart of [`Evaluation`]; the bound applies to the modulus
/// of the error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEvaluation {
    pub value: Complex64,
    pub err_bound: f64,
    pub terms_used: usize,
}

impl ComplexEvaluation {
    pub fn new(value: Complex64, err_bound: f64, terms_used: usize) -> Self {
        Self { value, err_bound, terms_used }
    }

    pub fn from_real(e: Evaluation) -> Self {
        Self::new(Complex64::new(e.value, 0.0), e.err_bound, e.terms_used)
    }

    pub fn re(&self) -> Evaluation {
        Evaluation::new(self.value.re, self.err_bound, self.terms_used)
    }

    pub fn im(&self) -> Evaluation {
        Evaluation::new(self.value.im, self.err_bound, self.terms_used)
    }

    pub fn conj(&self) -> Self {
        Self { value: self.value.conj(), ..*self }
    }
}

impl Add for ComplexEvaluation {
    type Output = ComplexEvaluation;
    fn add(self, rhs: ComplexEvaluation) -> ComplexEvaluation {
        let v = self.value + rhs.value;
        ComplexEvaluation::new(
            v,
            self.err_bound + rhs.err_bound + 2.0 * EPS * v.norm(),
            self.terms_used + rhs.terms_used,
        )
    }
}

impl Mul<f64> for ComplexEvaluation {
    type Output = ComplexEvaluation;
    fn mul(self, rhs: f64) -> ComplexEvaluation {
        let v = self.value * rhs;
        ComplexEvaluation::new(v, self.err_bound * rhs.abs() + 2.0 * EPS * v.norm(), self.terms_used)
    }
}

impl Add<Evaluation> for ComplexEvaluation {
    type Output = ComplexEvaluation;
    fn add(self, rhs: Evaluation) -> ComplexEvaluation {
        self + ComplexEvaluation::from_real(rhs)
    }
}
