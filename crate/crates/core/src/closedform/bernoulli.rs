//! Bernoulli-number series and their elementary closed forms.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::specfun::polylog;

use super::ClosedForms;

/// The four Bernoulli series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BernoulliKind {
    /// Σ B_{2k} (ln z)^{2k+1}/(k(2k+1)!) for z > 0, 0 < |ln z| ≤ 2π.
    LogSeries,
    /// Σ B_{2k} z^{2k+1}/(k(2k+1)!) for 0 < |z| ≤ 2π.
    OddSeries,
    /// Σ B_{2k} z^{2k}/(k(2k)!) for 0 < |z| ≤ 2π.
    EvenSeries,
    /// Σ_{k≥0} B_{2k} z^{2k}/(2k)! for |z| < 2π.
    GeneratingFunction,
}

impl ClosedForms<'_> {
    /// Closed forms of the Bernoulli series, with u = ln z for the log series:
    ///
    /// * log series: π²/3 − u²/2 + 2u(1 − ln(−u)) − 2 Li₂(z) for z < 1, odd in u;
    /// * odd series: (4z + z²)/2 − 2z ln z − π²/3 + 2 Li₂(e^{−z}) for z > 0, odd in z;
    /// * even series: 2 ln((2/z) sinh(z/2));
    /// * generating function: z/2 + z/(e^z − 1), equal to 1 at z = 0.
    ///
    /// # Example
    /// ```
    /// use zetaseries_core::closedform::{BernoulliKind, ClosedForms};
    /// let v = ClosedForms::standard().eval_bernoulli_family(2.0, BernoulliKind::EvenSeries).unwrap();
    /// assert!((v.value - 2.0 * 1f64.sinh().ln()).abs() < 1e-15);
    /// ```
    pub fn eval_bernoulli_family(&self, z: f64, which: BernoulliKind) -> Result<Evaluation> {
        let two_pi = 2.0 * self.pi();
        if !z.is_finite() {
            return Err(domain(format!("Bernoulli series need a finite argument, got {z}")));
        }
        match which {
            BernoulliKind::LogSeries => {
                if z.is_nan() || z <= 0.0 || z == 1.0 || z.ln().abs() > two_pi * (1.0 + 1e-12) {
                    return Err(domain(format!("the Bernoulli log series needs z > 0 with 0 < |ln z| <= 2π, got {z}")));
                }
                if z > 1.0 {
                    return Ok(-self.bernoulli_log(1.0 / z)?);
                }
                self.bernoulli_log(z)
            }
            BernoulliKind::OddSeries => {
                self.check_bernoulli(z, false)?;
                if z < 0.0 {
                    return Ok(-self.bernoulli_odd(-z)?);
                }
                self.bernoulli_odd(z)
            }
            BernoulliKind::EvenSeries => {
                self.check_bernoulli(z, false)?;
                let h = 0.5 * z.abs();
                // sinh(h)/h ≥ 1, so the logarithm never cancels.
                let ratio = h.sinh() / h;
                Ok(Evaluation::ln_of(ratio).widen(4.0 * EPS) * 2.0)
            }
            BernoulliKind::GeneratingFunction => {
                if z == 0.0 {
                    return Ok(Evaluation::exact(1.0));
                }
                self.check_bernoulli(z, true)?;
                let v = 0.5 * z + z / z.exp_m1();
                Ok(Evaluation::new(v, 4.0 * EPS * (0.5 * z.abs() + v.abs()), 0))
            }
        }
    }

    fn check_bernoulli(&self, z: f64, strict: bool) -> Result<()> {
        let limit = 2.0 * self.pi();
        let outside = if strict { z.abs() >= limit } else { z.abs() > limit * (1.0 + 1e-12) };
        if z == 0.0 || outside {
            let rel = if strict { "<" } else { "<=" };
            return Err(domain(format!("Bernoulli series need 0 < |z| {rel} 2π, got {z}")));
        }
        Ok(())
    }

    /// The log series for 0 < z < 1, u = ln z < 0.
    fn bernoulli_log(&self, z: f64) -> Result<Evaluation> {
        let u = Evaluation::ln_of(z);
        let uv = u.value;
        let pi2 = self.pi() * self.pi();
        let ln_neg_u = Evaluation::ln_of(-uv).widen(u.err_bound / -uv);
        let parts = vec![
            Evaluation::rounded(pi2 / 3.0),
            Evaluation::new(-0.5 * uv * uv, uv.abs() * u.err_bound + EPS * uv * uv, 0),
            (u * 2.0) * (Evaluation::exact(1.0) - ln_neg_u),
            -(polylog(2, z)? * 2.0),
        ];
        Ok(Evaluation::sum(parts))
    }

    /// The odd series for z > 0.
    fn bernoulli_odd(&self, z: f64) -> Result<Evaluation> {
        let pi2 = self.pi() * self.pi();
        // Li₂(e^{−z}) with the rounded exponential: |x Li₂′(x)| = |ln(1−x)|.
        let x = (-z).exp();
        let li = polylog(2, x)?.widen(2.0 * EPS * (1.0 + z) * (-(-x).ln_1p()));
        let parts = vec![
            Evaluation::rounded(0.5 * (4.0 * z + z * z)),
            -(Evaluation::ln_of(z) * (2.0 * z)),
            Evaluation::rounded(-pi2 / 3.0),
            li * 2.0,
        ];
        Ok(Evaluation::sum(parts))
    }
}
