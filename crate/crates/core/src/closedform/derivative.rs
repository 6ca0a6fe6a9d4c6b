//! Half-integer denominators, obtained by differentiating or integrating
//! P(1, z) in z.
//!
//! The alternating versions contain Li₂ and Li₃ at e^{2πz} > 1 and the
//! logarithm of the negative number −2 sinh(πz). Their right-hand sides are
//! evaluated in complex arithmetic on a fixed side of the cut; the
//! imaginary part must cancel and is reported as a residual.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evaluation::{ComplexEvaluation, Evaluation, EPS};
use crate::specfun::{polylog_cut, CutBranch};

use super::{check_z, ClosedForms};

/// Side of the cut used for Li_s(e^{2πz}). With ln(−x) = ln x + iπ for
/// x > 0, only the lower side makes the derivative identity real.
pub const PINNED_BRANCH: CutBranch = CutBranch::Lower;

/// Largest tolerated |Im| of a right-hand side that must be real.
const RESIDUAL_LIMIT: f64 = 1e-8;

/// The four half-integer identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DerivativeKind {
    /// Σ (−1)^{k−1} ζ(2k) z^{2k}/(2k+1), complex right-hand side.
    AlternatingHalfInt,
    /// Σ ζ(2k) z^{2k}/(2k+1) for 0 < |z| < 1.
    PositiveHalfInt,
    /// Σ (−1)^{k−1} ζ(2k) z^{2k}/((k+1)(2k+1)), complex right-hand side.
    AlternatingHalfIntKPlusOne,
    /// Σ ζ(2k) z^{2k}/((k+1)(2k+1)).
    PositiveHalfIntKPlusOne,
}

impl DerivativeKind {
    /// Whether the right-hand side passes through the cut.
    pub fn is_branched(self) -> bool {
        matches!(self, DerivativeKind::AlternatingHalfInt | DerivativeKind::AlternatingHalfIntKPlusOne)
    }
}

/// Real part of a right-hand side with the size of its imaginary part.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchedEvaluation {
    pub value: Evaluation,
    /// |Im| of the right-hand side; zero for the real identities.
    pub residual_im: f64,
    /// Side of the cut used, if any.
    pub branch: Option<CutBranch>,
}

impl ClosedForms<'_> {
    /// The half-integer identities on the pinned branch, with w = 2πz:
    ///
    /// * alternating 1/(2k+1):
    ///   −1/2 + πz/4 − π/(24z) + ln(−2 sinh πz)/2 + Li₂(e^{w})/(4πz);
    /// * positive 1/(2k+1): 1/2 − ln|2 sin πz|/2 − Cl₂(w)/(4πz);
    /// * alternating 1/((k+1)(2k+1)):
    ///   −1/2 − πz/6 − π/(12z) − ζ(3)/(2π²z²) + Li₃(e^{w})/(2π²z²) − Li₂(e^{w})/(2πz);
    /// * positive 1/((k+1)(2k+1)): 1/2 − ζ(3)/(2π²z²) + Cl₃(w)/(2π²z²) + Cl₂(w)/w.
    ///
    /// All four series are even in z, so |z| is used. Fails with
    /// [`Error::BranchInconsistency`] if the imaginary part exceeds 1e-8.
    pub fn eval_deriv_family(&self, z: f64, which: DerivativeKind) -> Result<BranchedEvaluation> {
        let out = self.eval_deriv_family_with_branch(z, which, PINNED_BRANCH)?;
        if out.residual_im > RESIDUAL_LIMIT {
            return Err(Error::BranchInconsistency { residual: out.residual_im, limit: RESIDUAL_LIMIT });
        }
        Ok(out)
    }

    /// As [`ClosedForms::eval_deriv_family`] on an explicit side of the cut,
    /// without rejecting a large residual.
    pub fn eval_deriv_family_with_branch(
        &self,
        z: f64,
        which: DerivativeKind,
        branch: CutBranch,
    ) -> Result<BranchedEvaluation> {
        if which == DerivativeKind::PositiveHalfInt {
            if !z.is_finite() || z == 0.0 || z.abs() >= 1.0 {
                return Err(crate::error::domain(format!("Σ ζ(2k) z^2k/(2k+1) needs 0 < |z| < 1, got {z}")));
            }
        } else {
            check_z(z, 1.0, "half-integer sums")?;
        }
        let z = z.abs();
        let pi = self.pi();
        let w = self.two_pi(z);
        let real = |value: Evaluation| BranchedEvaluation { value, residual_im: 0.0, branch: None };
        match which {
            DerivativeKind::PositiveHalfInt => {
                let s = (pi * z).sin();
                let ls = Evaluation::ln_of(2.0 * s).widen(4.0 * EPS * (1.0 + pi * z / s.abs()));
                let parts = vec![
                    Evaluation::exact(0.5),
                    -(ls * 0.5),
                    -(self.cl(2, w.value)? / Evaluation::rounded(4.0 * pi * z)),
                ];
                Ok(real(Evaluation::sum(parts)))
            }
            DerivativeKind::PositiveHalfIntKPlusOne => {
                let d = Evaluation::rounded(2.0 * pi * pi * z * z);
                let parts = vec![
                    Evaluation::exact(0.5),
                    -(self.zeta(3)? / d),
                    self.cl(3, w.value)? / d,
                    self.cl(2, w.value)? / w,
                ];
                Ok(real(Evaluation::sum(parts)))
            }
            DerivativeKind::AlternatingHalfInt => {
                let li2 = self.li_cut(2, w.value, branch)?;
                let sh = (pi * z).sinh();
                let log_neg = ComplexEvaluation::new(
                    Complex64::new((2.0 * sh).ln(), pi),
                    4.0 * EPS * (1.0 + (2.0 * sh).ln().abs() + pi),
                    0,
                );
                let reals = Evaluation::sum([
                    Evaluation::exact(-0.5),
                    Evaluation::rounded(pi * z / 4.0),
                    Evaluation::rounded(-pi / (24.0 * z)),
                ]);
                let total = log_neg * 0.5 + li2 * (1.0 / (4.0 * pi * z)) + reals;
                Ok(branched(total, branch))
            }
            DerivativeKind::AlternatingHalfIntKPlusOne => {
                let li2 = self.li_cut(2, w.value, branch)?;
                let li3 = self.li_cut(3, w.value, branch)?;
                let d = 2.0 * pi * pi * z * z;
                let reals = Evaluation::sum([
                    Evaluation::exact(-0.5),
                    Evaluation::rounded(-pi * z / 6.0),
                    Evaluation::rounded(-pi / (12.0 * z)),
                    -(self.zeta(3)? / d),
                ]);
                let total = li3 * (1.0 / d) + li2 * (-1.0 / (2.0 * pi * z)) + reals;
                Ok(branched(total, branch))
            }
        }
    }

    /// Li_s(e^{w}) on the given side, widened for the rounded exponential.
    fn li_cut(&self, s: u32, w: f64, branch: CutBranch) -> Result<ComplexEvaluation> {
        let v = polylog_cut(s, w.exp(), branch)?;
        // d/dw Li_s(e^w) = Li_{s−1}(e^w), of size at most w^{s−1} + π².
        let slope = w.powi(s as i32 - 1) + 10.0;
        Ok(ComplexEvaluation::new(v.value, v.err_bound + 4.0 * EPS * w * slope, v.terms_used))
    }
}

fn branched(total: ComplexEvaluation, branch: CutBranch) -> BranchedEvaluation {
    // Widen for the 1/(…) factors rounded before multiplication.
    let value = total.re().widen(4.0 * EPS * total.value.norm());
    BranchedEvaluation { value, residual_im: total.value.im.abs(), branch: Some(branch) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ZETA3: f64 = 1.202_056_903_159_594_2;
    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn positive_half_integer_values() {
        let cf = ClosedForms::standard();
        let v = cf.eval_deriv_family(0.5, DerivativeKind::PositiveHalfInt).unwrap().value.value;
        assert!((v - (0.5 - 0.5 * 2f64.ln())).abs() < 1e-15);
        let v = cf.eval_deriv_family(0.25, DerivativeKind::PositiveHalfInt).unwrap().value.value;
        assert!((v - (0.5 - 0.25 * 2f64.ln() - CATALAN / PI)).abs() < 1e-15);
        assert!(cf.eval_deriv_family(1.0, DerivativeKind::PositiveHalfInt).is_err());
    }

    #[test]
    fn positive_k_plus_one_values() {
        let cf = ClosedForms::standard();
        let v = cf.eval_deriv_family(1.0, DerivativeKind::PositiveHalfIntKPlusOne).unwrap().value.value;
        assert!((v - 0.5).abs() < 1e-15);
        let v = cf.eval_deriv_family(0.5, DerivativeKind::PositiveHalfIntKPlusOne).unwrap().value.value;
        assert!((v - (0.5 - 7.0 * ZETA3 / (2.0 * PI * PI))).abs() < 1e-15);
    }

    #[test]
    fn pinned_branch_cancels_imaginary_part() {
        let cf = ClosedForms::standard();
        for &z in &[0.1, 0.3, 0.5, 0.9, 1.0] {
            for kind in [DerivativeKind::AlternatingHalfInt, DerivativeKind::AlternatingHalfIntKPlusOne] {
                let v = cf.eval_deriv_family(z, kind).unwrap();
                assert!(v.residual_im < 1e-10, "z={z} {kind:?}: {}", v.residual_im);
                assert_eq!(v.branch, Some(PINNED_BRANCH));
            }
        }
    }

    #[test]
    fn other_branch_is_rejected() {
        let cf = ClosedForms::standard();
        let v = cf.eval_deriv_family_with_branch(0.5, DerivativeKind::AlternatingHalfInt, CutBranch::Upper).unwrap();
        assert!((v.residual_im - PI).abs() < 1e-12);
    }

    #[test]
    fn small_z_leading_term() {
        // Σ (−1)^{k−1} ζ(2k) z^{2k}/(2k+1) ≈ ζ(2) z²/3
        let cf = ClosedForms::standard();
        let z: f64 = 0.01;
        let v = cf.eval_deriv_family(z, DerivativeKind::AlternatingHalfInt).unwrap().value;
        let lead = PI * PI / 6.0 * z * z / 3.0 - PI.powi(4) / 90.0 * z.powi(4) / 5.0;
        assert!((v.value - lead).abs() < 1e-10 + v.err_bound);
    }
}
