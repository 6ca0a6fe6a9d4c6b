//! Extra powers of k in the denominator, reduced by partial fractions to
//! the power sums D_q(z) = Σ (−1)^k ζ(2k) z^{2k}/k^q and the one-parameter
//! sums S₂, S₃.
//!
//! D₁ is a log-sinh. No closed form is known for q ≥ 2, so those power sums
//! are evaluated as Σ_t Li_q(−(z/t)²) by [`crate::oracle::dilog_sum`].
//! Everything else comes from the polylogarithm identities.

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::oracle::{dilog_sum, Family, SeriesSpec, SignConvention, SummationBudget};

use super::{check_z, ClosedForms, DEFAULT_Q_BUDGET};

/// Absolute accuracy requested from the power sums with q ≥ 2.
const POWER_SUM_TOL: f64 = 1e-16;

impl ClosedForms<'_> {
    /// D_q(z) = Σ (−1)^k ζ(2k) z^{2k}/k^q for 0 < |z| ≤ 1.
    /// D₁(z) = −ln(sinh(πz)/(πz)); q ≥ 2 is summed numerically.
    pub fn eval_power_sum(&self, q: u32, z: f64) -> Result<Evaluation> {
        if q == 0 {
            return Err(domain("power sums need q >= 1"));
        }
        check_z(z, 1.0, "power sums")?;
        if q >= 2 {
            return dilog_sum(q, z, POWER_SUM_TOL, SummationBudget::default().dilog_terms);
        }
        let x = self.pi() * z.abs();
        // sinh(x)/x ≥ 1; relative rounding of a few ulps.
        Ok(-Evaluation::ln_of(x.sinh() / x).widen(4.0 * EPS))
    }

    /// S₂(n, z) = Σ (−1)^k ζ(2k) z^{2k}/(2k+n) = (D₁ − n P(n, z))/2.
    pub fn eval_s2(&self, n: u32, z: f64) -> Result<Evaluation> {
        let p = self.eval_p(n, z)?;
        Ok((self.eval_power_sum(1, z)? - p * n as f64) * 0.5)
    }

    /// S₃(m, z) = Σ (−1)^k ζ(2k) z^{2k}/(2k+m)² for 0 < z ≤ 1, from
    /// 1/(k(2k+m)²) = 1/(m²k) − 2/(m²(2k+m)) − 2/(m(2k+m)²).
    pub fn eval_s3(&self, m: u32, z: f64) -> Result<Evaluation> {
        let mf = m as f64;
        let q = -self.eval_q(m, z, DEFAULT_Q_BUDGET)?;
        let s1 = self.eval_power_sum(1, z)?;
        let s2 = self.eval_s2(m, z)?;
        Ok(((s1 - s2 * 2.0) / (mf * mf) - q) * (0.5 * mf))
    }

    /// P(n, z, p) = Σ (−1)^k ζ(2k) z^{2k}/(k^p(2k+n)):
    ///
    /// Σ_{j=0}^{p−1} (−2)^j/n^{j+1} D_{p−j}(z) + (−2/n)^p S₂(n, z).
    ///
    /// p = 0 gives S₂ itself.
    pub fn eval_ppow(&self, n: u32, z: f64, p: u32) -> Result<Evaluation> {
        if n == 0 {
            return Err(domain("P(n, z, p) needs n >= 1"));
        }
        let nf = n as f64;
        let mut parts = Vec::with_capacity(p as usize + 1);
        for j in 0..p {
            let c = (-2f64).powi(j as i32) / nf.powi(j as i32 + 1);
            parts.push(self.eval_power_sum(p - j, z)? * c);
        }
        parts.push(self.eval_s2(n, z)? * (-2.0 / nf).powi(p as i32));
        Ok(Evaluation::sum(parts))
    }

    /// P(m, n, z, p) = Σ (−1)^k ζ(2k) z^{2k}/(k^p(2k+m)(2k+n)) for m ≠ n:
    ///
    /// D_p/(mn) + 2 P(m, z, p−1)/(m(m−n)) − 2 P(n, z, p−1)/(n(m−n)).
    pub fn eval_pmnpow(&self, m: u32, n: u32, z: f64, p: u32) -> Result<Evaluation> {
        if m == 0 || n == 0 || m == n || p == 0 {
            return Err(domain("P(m, n, z, p) needs distinct m, n >= 1 and p >= 1"));
        }
        let (mf, nf) = (m as f64, n as f64);
        let diff = mf - nf;
        let parts = vec![
            self.eval_power_sum(p, z)? / (mf * nf),
            self.eval_ppow(m, z, p - 1)? * (2.0 / (mf * diff)),
            -(self.eval_ppow(n, z, p - 1)? * (2.0 / (nf * diff))),
        ];
        Ok(Evaluation::sum(parts))
    }

    /// Q(m, z, p) = Σ (−1)^k ζ(2k) z^{2k}/(k^p(2k+m)²) for 0 < z ≤ 1:
    ///
    /// Σ_{j=0}^{p−1} (−2)^j/m^{j+2} [D_{p−j} − 2 P(m, z, p−1−j)] + (−2/m)^p S₃(m, z).
    pub fn eval_qpow(&self, m: u32, z: f64, p: u32) -> Result<Evaluation> {
        if m == 0 || p == 0 {
            return Err(domain("Q(m, z, p) needs m >= 1 and p >= 1"));
        }
        let mf = m as f64;
        let mut parts = Vec::with_capacity(2 * p as usize + 1);
        for j in 0..p {
            let c = (-2f64).powi(j as i32) / mf.powi(j as i32 + 2);
            parts.push(self.eval_power_sum(p - j, z)? * c);
            parts.push(self.eval_ppow(m, z, p - 1 - j)? * (-2.0 * c));
        }
        parts.push(self.eval_s3(m, z)? * (-2.0 / mf).powi(p as i32));
        Ok(Evaluation::sum(parts))
    }

    /// Closed-form route for the families with an extra k^p: [`Family::Ppow`],
    /// [`Family::Pmnpow`] and [`Family::Qpow`], alternating sign only.
    pub fn eval_general_p(&self, spec: &SeriesSpec) -> Result<Evaluation> {
        spec.validate()?;
        if spec.sign != SignConvention::Alternating {
            return Err(Error::NoClosedForm(format!("{} is only reduced for the alternating sign", spec.family)));
        }
        let p = spec.need_p()?;
        match spec.family {
            Family::Ppow => self.eval_ppow(spec.need_n()?, spec.z, p),
            Family::Pmnpow => self.eval_pmnpow(spec.need_m()?, spec.need_n()?, spec.z, p),
            Family::Qpow => self.eval_qpow(spec.need_m()?, spec.z, p),
            other => Err(domain(format!("eval_general_p handles Ppow, Pmnpow and Qpow, not {other}"))),
        }
    }
}
