//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of evaluators, the summation oracle and the report writers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The function has a pole at the requested argument.
    #[error("pole: {0}")]
    Pole(String),

    /// The requested accuracy could not be reached within the term budget.
    #[error("term budget of {budget} exhausted; best error bound reached was {best_bound:e}")]
    BudgetExceeded { budget: usize, best_bound: f64 },

    /// The imaginary part of a right-hand side that must be real did not cancel.
    #[error("branch residual {residual:e} exceeds {limit:e}; wrong side of the cut?")]
    BranchInconsistency { residual: f64, limit: f64 },

    /// Input handed to an algorithm violates its structural contract.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The result would not be representable as a finite double.
    #[error("overflow: {0}")]
    Overflow(String),

    /// No closed form is available for the requested series.
    #[error("no closed form: {0}")]
    NoClosedForm(String),

    /// Report generation failed.
    #[error("report error: {0}")]
    Report(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
