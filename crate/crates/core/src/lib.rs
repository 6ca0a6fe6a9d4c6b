//! Rational zeta series: closed forms, special functions, and an
//! independent summation oracle for checking one against the other.
//!
//! The central objects are series Σ_k r(k)·ζ(2k)·z^{2k} with r rational in
//! k, for example P(n, z) = Σ (−1)^k ζ(2k) z^{2k}/(k(2k+n)). For each family
//! the crate provides
//!
//! * a closed-form evaluator built from logarithms, polylogarithms at
//!   e^{−2πz}, Clausen functions and odd zeta values ([`closedform`]),
//! * a brute-force evaluator that sums the series itself with rigorous
//!   tail bounds and convergence acceleration near |z| = 1 ([`oracle`]),
//! * a registry and runner that compares the two over parameter grids and
//!   writes CSV, JSON or Markdown reports ([`harness`]).
//!
//! # Example
//! ```
//! use zetaseries_core::closedform::ClosedForms;
//! use zetaseries_core::oracle::{sum_series, SeriesSpec, SignConvention};
//!
//! let closed = ClosedForms::standard().eval_p(1, 1.0).unwrap();
//! let spec = SeriesSpec::p(1, 1.0, SignConvention::Alternating);
//! let brute = sum_series(&spec, 1e-13).unwrap();
//! assert!((closed.value - brute.value).abs() < 1e-10);
//! ```

pub mod acceleration;
pub mod closedform;
pub mod error;
pub mod evaluation;
pub mod harness;
pub mod oracle;
pub mod quadrature;
pub mod sequences;
pub mod specfun;
pub mod summation;

pub use error::{Error, Result};
pub use evaluation::{ComplexEvaluation, Evaluation};
pub use specfun::ConstantsTable;
