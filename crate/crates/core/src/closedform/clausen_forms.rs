//! Positive-sign series at real z through Clausen functions of 2πz.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::evaluation::Evaluation;

use super::{check_z, factorial, parity_sign, powi, ClosedForms};

/// The two single-Clausen identities for n = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SimpleClausenKind {
    /// Σ ζ(2k) z^{2k}/(k(2k+1)).
    OddDenominator,
    /// Σ ζ(2k) z^{2k}/(k(k+1)).
    KKPlusOne,
}

impl ClosedForms<'_> {
    /// (Σ ζ(2k) z^{2k}/(k(k+n)), Σ ζ(2k) z^{2k}/(k(2k−1+2n))) for 0 < |z| ≤ 1,
    /// with w = 2π|z|:
    ///
    /// −1/(2n²) + ln w/n + (−1)^n 2(2n−1)! ζ(2n+1)/w^{2n}
    /// − 2(2n−1)! Σ_{j=1}^{n} (−1)^j [(2n+1−2j) Cl_{2j+1}(w) + w Cl_{2j}(w)]/((2n+1−2j)! w^{2j})
    ///
    /// and
    ///
    /// −1/(2n−1)² + ln w/(2n−1)
    /// − (2n−2)! Σ_{j=1}^{n} (−1)^j [(2n+1−2j) Cl_{2j}(w) − [j ≥ 2] w Cl_{2j−1}(w)]/((2n+1−2j)! w^{2j−1}).
    ///
    /// For small |z| and large n the terms cancel heavily, which shows up
    /// as a large error bound rather than a silently wrong value.
    pub fn eval_even_halfint(&self, n: u32, z: f64) -> Result<(Evaluation, Evaluation)> {
        if n == 0 {
            return Err(domain("Clausen sums need n >= 1"));
        }
        check_z(z, 1.0, "Clausen sums")?;
        let w = self.two_pi(z.abs());
        let nf = n as f64;
        let odd = 2.0 * nf - 1.0;
        let lw = Evaluation::ln_of(w.value).widen(w.err_bound / w.value);

        let f_odd = factorial(2 * n - 1);
        let mut first = vec![
            Evaluation::rounded(-0.5 / (nf * nf)),
            lw / nf,
            self.zeta(2 * n + 1)? * powi(w, -2 * n as i32) * (parity_sign(n as i64) * 2.0 * f_odd),
        ];
        let f_even = factorial(2 * n - 2);
        let mut second = vec![Evaluation::rounded(-1.0 / (odd * odd)), lw / odd];

        for j in 1..=n {
            let sj = parity_sign(j as i64);
            let r = 2 * n + 1 - 2 * j;
            let rf = r as f64;
            let denom = factorial(r);
            let cl_odd = self.cl(2 * j + 1, w.value)?;
            let cl_even = self.cl(2 * j, w.value)?;
            let inner = cl_odd * rf + cl_even * w;
            first.push(inner * powi(w, -2 * j as i32) * (-2.0 * f_odd * sj / denom));

            let mut inner = cl_even * rf;
            if j >= 2 {
                inner = inner - self.cl(2 * j - 1, w.value)? * w;
            }
            second.push(inner * powi(w, 1 - 2 * j as i32) * (-f_even * sj / denom));
        }
        Ok((Evaluation::sum(first), Evaluation::sum(second)))
    }

    /// The n = 1 identities, with w = 2π|z|:
    ///
    /// * Σ ζ(2k) z^{2k}/(k(2k+1)) = −1 + ln w + Cl₂(w)/w,
    /// * Σ ζ(2k) z^{2k}/(k(k+1)) = −1/2 + ln w − ζ(3)/(2π²z²) + Cl₃(w)/(2π²z²) + Cl₂(w)/(πz).
    ///
    /// Both right-hand sides are even in z: Cl₂ and the divisor flip sign
    /// together, so |z| is used throughout.
    ///
    /// # Example
    /// ```
    /// use zetaseries_core::closedform::{ClosedForms, SimpleClausenKind};
    /// use std::f64::consts::PI;
    /// let catalan = 0.915_965_594_177_219;
    /// let v = ClosedForms::standard().eval_t6(0.25, SimpleClausenKind::OddDenominator).unwrap();
    /// assert!((v.value - ((PI / 2.0).ln() - 1.0 + 2.0 * catalan / PI)).abs() < 1e-14);
    /// ```
    pub fn eval_t6(&self, z: f64, which: SimpleClausenKind) -> Result<Evaluation> {
        check_z(z, 1.0, "Clausen sums")?;
        let z = z.abs();
        let w = self.two_pi(z);
        let lw = Evaluation::ln_of(w.value).widen(w.err_bound / w.value);
        let cl2 = self.cl(2, w.value)?;
        let parts = match which {
            SimpleClausenKind::OddDenominator => vec![Evaluation::exact(-1.0), lw, cl2 / w],
            SimpleClausenKind::KKPlusOne => {
                let two_pi2_z2 = Evaluation::rounded(2.0 * self.pi() * self.pi() * z * z);
                vec![
                    Evaluation::exact(-0.5),
                    lw,
                    -(self.zeta(3)? / two_pi2_z2),
                    self.cl(3, w.value)? / two_pi2_z2,
                    cl2 / Evaluation::rounded(self.pi() * z),
                ]
            }
        };
        Ok(Evaluation::sum(parts))
    }
}
