//! Identities whose right-hand sides use Li_s(e^{−2πz}): P(n, z), the
//! two-parameter series and its degenerate m = n case.

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::sequences::harmonic;
use crate::specfun::{ein, inc_gamma_int};

use super::{check_z, factorial, powi, ClosedForms};

/// Default cap on the number of exactly summed k-terms in [`ClosedForms::eval_q`].
pub const DEFAULT_Q_BUDGET: usize = 20_000;

/// Relative bound on B_8/8!, used for the Euler–Maclaurin remainder.
const B8_OVER_8FACT: f64 = 1.0 / 1_209_600.0;

/// B_{2j}/(2j)! for j = 1..=4.
const EM_COEFFS: [f64; 4] = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0];

impl ClosedForms<'_> {
    /// P(n, z) = Σ_{k≥1} (−1)^k ζ(2k) z^{2k}/(k(2k+n)) for 0 < |z| ≤ 1:
    ///
    /// −1/n² − πz/(n+1) + ln(2πz)/n + (n−1)! ζ(n+1)/(2πz)^n
    /// − (n−1)! Σ_{j=1}^{n} Li_{j+1}(e^{−2πz})/((n−j)!(2πz)^j).
    ///
    /// Negative z is mapped to |z|; the series only involves z².
    ///
    /// # Example
    /// ```
    /// use zetaseries_core::closedform::ClosedForms;
    /// let pi = std::f64::consts::PI;
    /// let li2 = zetaseries_core::specfun::polylog(2, (-2.0 * pi).exp()).unwrap().value;
    /// let expect = -(1.0 + 5.0 * pi / 12.0 - (2.0 * pi).ln() + li2 / (2.0 * pi));
    /// let v = ClosedForms::standard().eval_p(1, 1.0).unwrap();
    /// assert!((v.value - expect).abs() < 1e-14);
    /// ```
    pub fn eval_p(&self, n: u32, z: f64) -> Result<Evaluation> {
        if n == 0 {
            return Err(domain("P(n, z) needs n >= 1"));
        }
        check_z(z, 1.0, "P(n, z)")?;
        let z = z.abs();
        let w = self.two_pi(z);
        let nf = n as f64;
        let mut parts = vec![
            Evaluation::rounded(-1.0 / (nf * nf)),
            Evaluation::rounded(-self.pi() * z / (nf + 1.0)),
            Evaluation::ln_of(w.value).widen(w.err_bound / w.value) / nf,
            self.zeta(n + 1)? * factorial(n - 1) * powi(w, -(n as i32)),
        ];
        parts.push(-self.polylog_block(n, w)?);
        Ok(Evaluation::sum(parts))
    }

    /// (q−1)! Σ_{j=1}^{q} Li_{j+1}(e^{−w})/((q−j)! w^j).
    fn polylog_block(&self, q: u32, w: Evaluation) -> Result<Evaluation> {
        let mut parts = Vec::with_capacity(q as usize);
        for j in 1..=q {
            let li = self.li_exp(j + 1, w.value)?;
            parts.push(li * powi(w, -(j as i32)) * (factorial(q - 1) / factorial(q - j)));
        }
        Ok(Evaluation::sum(parts))
    }

    /// Σ_{k≥1} (−1)^{k−1} ζ(2k) z^{2k}/(k(2k+m)(2k+n)) for m ≠ n and
    /// 0 < |z| ≤ 1, i.e. −P(m, n, z):
    ///
    /// (m+n)/(mn)² + πz/((m+1)(n+1)) − ln(2πz)/(mn)
    /// + [(m−1)!ζ(m+1)/(2πz)^m − (n−1)!ζ(n+1)/(2πz)^n]/(m−n) − [A(m) − A(n)]/(m−n)
    ///
    /// with A(q) the polylogarithm block of [`ClosedForms::eval_p`].
    pub fn eval_pmn(&self, m: u32, n: u32, z: f64) -> Result<Evaluation> {
        if m == 0 || n == 0 {
            return Err(domain("P(m, n, z) needs m, n >= 1"));
        }
        if m == n {
            return Err(domain("P(m, n, z) needs m != n; use eval_q for the equal case"));
        }
        check_z(z, 1.0, "P(m, n, z)")?;
        let z = z.abs();
        let w = self.two_pi(z);
        let (mf, nf) = (m as f64, n as f64);
        let mn = mf * nf;
        let diff = mf - nf;
        let zeta_m = self.zeta(m + 1)? * factorial(m - 1) * powi(w, -(m as i32));
        let zeta_n = self.zeta(n + 1)? * factorial(n - 1) * powi(w, -(n as i32));
        let parts = vec![
            Evaluation::rounded((mf + nf) / (mn * mn)),
            Evaluation::rounded(self.pi() * z / ((mf + 1.0) * (nf + 1.0))),
            -(Evaluation::ln_of(w.value).widen(w.err_bound / w.value) / mn),
            zeta_m / diff,
            -(zeta_n / diff),
            -(self.polylog_block(m, w)? / diff),
            self.polylog_block(n, w)? / diff,
        ];
        Ok(Evaluation::sum(parts))
    }

    /// Σ_{k≥1} (−1)^{k−1} ζ(2k) z^{2k}/(k(2k+m)²) for 0 < z ≤ 1, i.e. −Q(m, z):
    ///
    /// 2/m³ + πz/(m+1)² − ln(2πz)/m² + (m−1)! ζ(m+1) H_{m−1}/(2πz)^m
    /// + (m!/m²) Σ_{j=1}^{m} Li_{j+1}(e^{−2πz})/((m−j)!(2πz)^j)
    ///   − (m−1)!/(2πz)^m · Σ_{k≥1} [Ein(2πzk) + Σ_{j=1}^{m} Γ(j, 2πzk)/j!]/k^{m+1}.
    ///
    /// The k-sum is taken exactly up to a cutoff K where the exponentially
    /// small parts E₁ and Γ(j, ·) have died out; beyond it the summand is
    /// (γ + ln(2πz) + ln k)/k^{m+1} and is summed by Euler–Maclaurin.
    /// Fails if K would exceed `k_budget`.
    pub fn eval_q(&self, m: u32, z: f64, k_budget: usize) -> Result<Evaluation> {
        if m == 0 {
            return Err(domain("Q(m, z) needs m >= 1"));
        }
        if !(z > 0.0 && z <= 1.0) {
            return Err(domain(format!("Q(m, z) is defined for 0 < z <= 1, got {z}")));
        }
        let w = self.two_pi(z);
        let mf = m as f64;
        let wm = powi(w, -(m as i32));
        let ks = self.q_kernel_sum(m, w.value, k_budget)?;
        let parts = vec![
            Evaluation::rounded(2.0 / (mf * mf * mf)),
            Evaluation::rounded(self.pi() * z / ((mf + 1.0) * (mf + 1.0))),
            -(Evaluation::ln_of(w.value).widen(w.err_bound / w.value) / (mf * mf)),
            self.zeta(m + 1)? * wm * (factorial(m - 1) * harmonic(m as usize - 1)),
            // m!/m² = (m−1)!/m and the block already carries (m−1)!.
            self.polylog_block(m, w)? / mf,
            -(ks * wm * factorial(m - 1)),
        ];
        Ok(Evaluation::sum(parts))
    }

    /// Σ_{k≥1} [Ein(wk) + Σ_{j=1}^{m} Γ(j, wk)/j!]/k^{m+1}.
    fn q_kernel_sum(&self, m: u32, w: f64, k_budget: usize) -> Result<Evaluation> {
        let s = m as f64 + 1.0;
        let mf = m as f64;
        // Beyond x = wK ≥ max(2m, 40) the terms E₁(x) + Σ Γ(j, x)/j! are
        // below e^{−x}(1/x + 2m x^{m−1}) and shrink at least like e^{−x/2}.
        let x_cut = (2.0 * mf).max(40.0);
        let big_k = ((x_cut / w).ceil() as usize).max(32);
        if big_k > k_budget {
            let x = w * k_budget as f64;
            let rest = (-x).exp() * (1.0 / x + 2.0 * mf * x.powf(mf - 1.0));
            return Err(Error::BudgetExceeded { budget: k_budget, best_bound: rest });
        }

        let mut exact = Vec::with_capacity(big_k);
        for k in 1..big_k {
            let x = w * k as f64;
            let mut term = ein(x)?;
            for j in 1..=m {
                term = term + inc_gamma_int(j, x)? / factorial(j);
            }
            exact.push(term / (k as f64).powf(s));
        }
        let head = Evaluation::sum(exact);

        let kf = big_k as f64;
        let xk = w * kf;
        let dropped =
            (-xk).exp() * (1.0 / xk + 2.0 * mf * xk.powf(mf - 1.0)) / kf.powf(s) / ((0.5 * w).exp() - 1.0).max(1e-300);

        // g(t) = (c + ln t) t^{−s}; g^{(i)}(t) = t^{−s−i}(a_i ln t + b_i).
        let c = self.consts.euler_gamma + w.ln();
        let lk = kf.ln();
        let mut a = 1.0;
        let mut b = c;
        let mut derivs = [0.0; 8];
        for (i, d) in derivs.iter_mut().enumerate() {
            *d = kf.powf(-s - i as f64) * (a * lk + b);
            let fi = s + i as f64;
            b = -fi * b + a;
            a *= -fi;
        }
        let integral = (c + lk) * kf.powf(1.0 - s) / (s - 1.0) + kf.powf(1.0 - s) / ((s - 1.0) * (s - 1.0));
        let mut tail = vec![Evaluation::rounded(integral), Evaluation::rounded(0.5 * derivs[0])];
        for (j, coeff) in EM_COEFFS.iter().enumerate() {
            tail.push(Evaluation::rounded(-coeff * derivs[2 * j + 1]));
        }
        let remainder = 2.0 * B8_OVER_8FACT * derivs[7].abs();
        let tail = Evaluation::sum(tail).widen(remainder + 8.0 * EPS * (c.abs() + lk) * kf.powf(1.0 - s));
        Ok((head + tail).widen(dropped).with_terms(big_k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::polylog;
    use std::f64::consts::PI;

    const ZETA3: f64 = 1.202_056_903_159_594_2;

    fn li(s: u32, x: f64) -> f64 {
        polylog(s, x).unwrap().value
    }

    #[test]
    fn unit_argument_matches_known_identity() {
        let v = ClosedForms::standard().eval_p(1, 1.0).unwrap();
        let expect = -(1.0 + 5.0 * PI / 12.0 - (2.0 * PI).ln() + li(2, (-2.0 * PI).exp()) / (2.0 * PI));
        assert!((v.value - expect).abs() < 1e-14);
        assert!((v.value + 0.471_42).abs() < 1e-5);
        assert!(v.err_bound < 1e-13);
    }

    #[test]
    fn inverse_root_two_argument() {
        let z = 0.5f64.sqrt();
        let s2p = 2f64.sqrt() * PI;
        let expect = -(1.0 + PI / (3.0 * 2f64.sqrt()) - s2p.ln() + li(2, (-s2p).exp()) / s2p);
        let v = ClosedForms::standard().eval_p(1, z).unwrap();
        assert!((v.value - expect).abs() < 1e-14);
    }

    #[test]
    fn negative_argument_uses_evenness() {
        let cf = ClosedForms::standard();
        assert_eq!(cf.eval_p(3, -0.4).unwrap().value, cf.eval_p(3, 0.4).unwrap().value);
        assert!(cf.eval_p(1, 0.0).is_err());
        assert!(cf.eval_p(1, 1.5).is_err());
    }

    #[test]
    fn pmn_examples() {
        let cf = ClosedForms::standard();
        let v = cf.eval_pmn(1, 2, 1.0).unwrap().value;
        let tp = 2.0 * PI;
        let expect = 0.75 + PI / 12.0 - tp.ln() / 2.0 + ZETA3 / (tp * tp) - li(3, (-tp).exp()) / (tp * tp);
        assert!((v - expect).abs() < 1e-14);
        let v = cf.eval_pmn(1, 3, 0.5).unwrap().value;
        let ep = (-PI).exp();
        let expect = 4.0 / 9.0 - 7.0 * PI / 720.0 - PI.ln() / 3.0 - li(3, ep) / (PI * PI) - li(4, ep) / PI.powi(3);
        assert!((v - expect).abs() < 1e-14);
        assert!(cf.eval_pmn(2, 2, 0.5).is_err());
    }

    #[test]
    fn q_budget_doubling_is_within_bound() {
        let cf = ClosedForms::standard();
        for &(m, z) in &[(1u32, 1.0), (2, 0.5), (4, 0.25)] {
            let a = cf.eval_q(m, z, DEFAULT_Q_BUDGET).unwrap();
            let b = cf.eval_q(m, z, 2 * DEFAULT_Q_BUDGET).unwrap();
            assert!((a.value - b.value).abs() <= a.err_bound, "m={m} z={z}");
            assert!(a.err_bound < 1e-12, "m={m} z={z} err={}", a.err_bound);
        }
        assert!(matches!(cf.eval_q(2, 0.001, 10), Err(Error::BudgetExceeded { .. })));
        assert!(cf.eval_q(2, -0.5, DEFAULT_Q_BUDGET).is_err());
    }

    #[test]
    fn q_kernel_tail_matches_longer_exact_sum() {
        // Push the exact/EM switch further out and compare.
        let cf = ClosedForms::standard();
        let w = 2.0 * PI * 0.5;
        let a = cf.q_kernel_sum(2, w, DEFAULT_Q_BUDGET).unwrap();
        let mut b = Vec::new();
        for k in 1..4000 {
            let x = w * k as f64;
            let mut t = ein(x).unwrap();
            for j in 1..=2 {
                t = t + inc_gamma_int(j, x).unwrap() / factorial(j);
            }
            b.push(t / (k as f64).powi(3));
        }
        let b = Evaluation::sum(b);
        // Σ_{k≥T} (c + ln k)/k³ ≈ ∫_T^∞ + f(T)/2 = (c + ln T)/(2T²) + 1/(4T²) + f(T)/2
        let c = 0.5772156649015329 + w.ln();
        let t = 4000f64;
        let rest = (c + t.ln()) / (2.0 * t * t) + 1.0 / (4.0 * t * t) + 0.5 * (c + t.ln()) / t.powi(3);
        assert!((a.value - b.value - rest).abs() < 1e-12);
    }
}
