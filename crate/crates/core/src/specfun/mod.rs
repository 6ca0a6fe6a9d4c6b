//! Special-function kernel: zeta at integers, real polylogarithms and their
//! continuation across the cut, Clausen functions, incomplete gamma at
//! integer order, Ein and trigamma.
//!
//! Every function returns an [`Evaluation`](crate::Evaluation) whose
//! `err_bound` is an absolute bound on the error of `value`.

mod clausen;
pub mod constants;
mod gamma;
mod polylog;
mod zeta;

pub use clausen::{clausen, clausen_fourier};
pub use constants::{ConstantsTable, MAX_TABULATED_ZETA, STANDARD};
pub use gamma::{ein, exp_integral_e1, inc_gamma_int, trigamma, EIN_SWITCH, TRIGAMMA_SHIFT};
pub use polylog::{polylog, polylog_cut, polylog_partial, CutBranch};
pub use zeta::{zeta_eta, zeta_even_minus_one, zeta_int, zeta_minus_one};
