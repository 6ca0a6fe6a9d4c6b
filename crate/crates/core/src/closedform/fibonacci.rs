//! Series weighted by F_{2k} or L_{2k}.
//!
//! By the Binet formulas these are combinations of the plain series at
//! αz and βz; the closed forms below are written in w = 2πz with α, β
//! folded into the coefficients and the Clausen or polylogarithm arguments.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::evaluation::Evaluation;
use crate::sequences::BINET;

use super::{check_z, factorial, parity_sign, powi, ClosedForms};

/// The eight Fibonacci and Lucas identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FibonacciKind {
    /// −√5 Σ (−1)^k F_{2k} ζ(2k) z^{2k}/(k(2k+n)).
    FibonacciPolylog,
    /// −Σ (−1)^k L_{2k} ζ(2k) z^{2k}/(k(2k+n)).
    LucasPolylog,
    /// Σ F_{2k} ζ(2k) z^{2k}/(k(2k+1)).
    FibonacciOddDenominator,
    /// Σ L_{2k} ζ(2k) z^{2k}/(k(2k+1)).
    LucasOddDenominator,
    /// (√5/2) Σ F_{2k} ζ(2k) z^{2k}/(k(k+n)).
    FibonacciKKPlusN,
    /// (1/2) Σ L_{2k} ζ(2k) z^{2k}/(k(k+n)).
    LucasKKPlusN,
    /// √5 Σ F_{2k} ζ(2k) z^{2k}/(k(2k−1+2n)).
    FibonacciOddShift,
    /// Σ L_{2k} ζ(2k) z^{2k}/(k(2k−1+2n)).
    LucasOddShift,
}

impl FibonacciKind {
    fn is_lucas(self) -> bool {
        matches!(
            self,
            FibonacciKind::LucasPolylog
                | FibonacciKind::LucasOddDenominator
                | FibonacciKind::LucasKKPlusN
                | FibonacciKind::LucasOddShift
        )
    }
}

impl ClosedForms<'_> {
    /// The Fibonacci and Lucas identities; each variant documents the
    /// normalisation of the series it returns. With w = 2πz:
    ///
    /// * polylogarithm forms (0 < |z| ≤ 1):
    ///   πz/(n+1) − 2 ln α/n + 2(n−1)! sinh(n ln α) ζ(n+1)/w^n
    ///   − (n−1)! Σ_{j=1}^{n} [α^j Li_{j+1}(e^{2πβz}) − (−β)^j Li_{j+1}(e^{−2παz})]/((n−j)! w^j)
    ///   and
    ///   √5πz/(n+1) − 2 ln w/n + 2/n² − 2(n−1)! cosh(n ln α) ζ(n+1)/w^n
    ///   + (n−1)! Σ_{j=1}^{n} [α^j Li_{j+1}(e^{2πβz}) + (−β)^j Li_{j+1}(e^{−2παz})]/((n−j)! w^j);
    /// * odd-denominator forms (n unused):
    ///   2 ln α/√5 − [β Cl₂(2παz) − α Cl₂(2πβz)]/(2√5πz) and
    ///   −2 + 2 ln w − [β Cl₂(2παz) + α Cl₂(2πβz)]/(2πz);
    /// * k(k+n) forms, with ∓ for Fibonacci and ± for Lucas:
    ///   [ln α/n] or [−1/(2n²) + ln w/n], plus (−1)^n (2n−1)! (β^{2n} ± α^{2n}) ζ(2n+1)/w^{2n}
    ///   − (2n−1)! Σ_j (−1)^j [β^{2j} Cl_{2j+1}(2παz) ± α^{2j} Cl_{2j+1}(2πβz)]/((2n−2j)! w^{2j})
    ///   + (2n−1)! Σ_j (−1)^j [β^{2j−1} Cl_{2j}(2παz) ± α^{2j−1} Cl_{2j}(2πβz)]/((2n+1−2j)! w^{2j−1});
    /// * odd-shift forms, with I(y) the inner Clausen sum of
    ///   [`ClosedForms::eval_even_halfint`]:
    ///   2 ln α/(2n−1) − (2n−2)! [I(αz) − I(βz)] and
    ///   −2/(2n−1)² + 2 ln w/(2n−1) − (2n−2)! [I(αz) + I(βz)].
    ///
    /// All series are even in z and negative arguments use |z|.
    pub fn eval_fibonacci_family(&self, n: u32, z: f64, which: FibonacciKind) -> Result<Evaluation> {
        if n == 0 {
            return Err(domain("Fibonacci and Lucas sums need n >= 1"));
        }
        match which {
            FibonacciKind::FibonacciPolylog | FibonacciKind::LucasPolylog => {
                check_z(z, 1.0, "Fibonacci and Lucas polylogarithm forms")?
            }
            _ => check_z(z, BINET.radius(), "Fibonacci and Lucas Clausen forms")?,
        }
        let z = z.abs();
        let lucas = which.is_lucas();
        match which {
            FibonacciKind::FibonacciPolylog | FibonacciKind::LucasPolylog => self.fib_polylog(n, z, lucas),
            FibonacciKind::FibonacciOddDenominator | FibonacciKind::LucasOddDenominator => {
                self.fib_odd_denominator(z, lucas)
            }
            FibonacciKind::FibonacciKKPlusN | FibonacciKind::LucasKKPlusN => self.fib_kk_plus_n(n, z, lucas),
            FibonacciKind::FibonacciOddShift | FibonacciKind::LucasOddShift => self.fib_odd_shift(n, z, lucas),
        }
    }

    fn fib_polylog(&self, n: u32, z: f64, lucas: bool) -> Result<Evaluation> {
        let (alpha, beta) = (BINET.alpha, BINET.beta);
        let nf = n as f64;
        let w = self.two_pi(z);
        let pi_z = self.pi() * z;
        let y_beta = 2.0 * pi_z * -beta;
        let y_alpha = 2.0 * pi_z * alpha;
        let nl = nf * self.consts.ln_alpha;
        let lead = powi(w, -(n as i32)) * factorial(n - 1);
        let mut parts = Vec::new();
        if lucas {
            parts.push(Evaluation::rounded(BINET.sqrt5 * pi_z / (nf + 1.0)));
            parts.push(-(Evaluation::ln_of(w.value).widen(w.err_bound / w.value) * (2.0 / nf)));
            parts.push(Evaluation::rounded(2.0 / (nf * nf)));
            parts.push(-(self.zeta(n + 1)? * lead * (2.0 * nl.cosh())));
        } else {
            parts.push(Evaluation::rounded(pi_z / (nf + 1.0)));
            parts.push(Evaluation::rounded(-2.0 * self.consts.ln_alpha / nf));
            parts.push(self.zeta(n + 1)? * lead * (2.0 * nl.sinh()));
        }
        let sign = if lucas { 1.0 } else { -1.0 };
        for j in 1..=n {
            let c = factorial(n - 1) / factorial(n - j);
            let a = self.li_exp(j + 1, y_beta)? * alpha.powi(j as i32);
            let b = self.li_exp(j + 1, y_alpha)? * (-beta).powi(j as i32);
            parts.push((a + b * sign) * powi(w, -(j as i32)) * (sign * c));
        }
        Ok(Evaluation::sum(parts))
    }

    fn fib_odd_denominator(&self, z: f64, lucas: bool) -> Result<Evaluation> {
        let (alpha, beta) = (BINET.alpha, BINET.beta);
        let tpz = 2.0 * self.pi() * z;
        let ca = self.cl(2, tpz * alpha)?;
        let cb = self.cl(2, tpz * beta)?;
        let d = Evaluation::rounded(tpz);
        let parts = if lucas {
            vec![Evaluation::exact(-2.0), Evaluation::ln_of(tpz) * 2.0, -((ca * beta + cb * alpha) / d)]
        } else {
            vec![
                Evaluation::rounded(2.0 * self.consts.ln_alpha / BINET.sqrt5),
                -((ca * beta - cb * alpha) / d) / BINET.sqrt5,
            ]
        };
        Ok(Evaluation::sum(parts))
    }

    fn fib_kk_plus_n(&self, n: u32, z: f64, lucas: bool) -> Result<Evaluation> {
        let (alpha, beta) = (BINET.alpha, BINET.beta);
        let sign = if lucas { 1.0 } else { -1.0 };
        let nf = n as f64;
        let w = self.two_pi(z);
        let (ta, tb) = (w.value * alpha, w.value * beta);
        let f_odd = factorial(2 * n - 1);
        let mut parts = Vec::new();
        if lucas {
            parts.push(Evaluation::rounded(-0.5 / (nf * nf)));
            parts.push(Evaluation::ln_of(w.value).widen(w.err_bound / w.value) / nf);
        } else {
            parts.push(Evaluation::rounded(self.consts.ln_alpha / nf));
        }
        let n2 = 2 * n as i32;
        let weight = beta.powi(n2) + sign * alpha.powi(n2);
        parts.push(self.zeta(2 * n + 1)? * powi(w, -n2) * (parity_sign(n as i64) * f_odd * weight));
        for j in 1..=n {
            let sj = parity_sign(j as i64);
            let j2 = 2 * j as i32;
            let odd = self.cl(2 * j + 1, ta)? * beta.powi(j2) + self.cl(2 * j + 1, tb)? * (sign * alpha.powi(j2));
            parts.push(odd * powi(w, -j2) * (-sj * f_odd / factorial(2 * n - 2 * j)));
            let even = self.cl(2 * j, ta)? * beta.powi(j2 - 1) + self.cl(2 * j, tb)? * (sign * alpha.powi(j2 - 1));
            parts.push(even * powi(w, 1 - j2) * (sj * f_odd / factorial(2 * n + 1 - 2 * j)));
        }
        Ok(Evaluation::sum(parts))
    }

    fn fib_odd_shift(&self, n: u32, z: f64, lucas: bool) -> Result<Evaluation> {
        let odd = 2.0 * n as f64 - 1.0;
        let f_even = factorial(2 * n - 2);
        let ia = self.odd_shift_inner(n, BINET.alpha * z)?;
        let ib = self.odd_shift_inner(n, -BINET.beta * z)?;
        let parts = if lucas {
            let w = self.two_pi(z);
            vec![
                Evaluation::rounded(-2.0 / (odd * odd)),
                Evaluation::ln_of(w.value).widen(w.err_bound / w.value) * (2.0 / odd),
                -((ia + ib) * f_even),
            ]
        } else {
            vec![Evaluation::rounded(2.0 * self.consts.ln_alpha / odd), -((ia - ib) * f_even)]
        };
        Ok(Evaluation::sum(parts))
    }

    /// Σ_{j=1}^{n} (−1)^j [(2n+1−2j) Cl_{2j}(2πy) − [j ≥ 2] 2πy Cl_{2j−1}(2πy)]/((2n+1−2j)! (2πy)^{2j−1})
    /// for y > 0; the sum is even in y.
    fn odd_shift_inner(&self, n: u32, y: f64) -> Result<Evaluation> {
        let t = self.two_pi(y);
        let mut parts = Vec::with_capacity(n as usize);
        for j in 1..=n {
            let r = 2 * n + 1 - 2 * j;
            let mut inner = self.cl(2 * j, t.value)? * r as f64;
            if j >= 2 {
                inner = inner - self.cl(2 * j - 1, t.value)? * t;
            }
            parts.push(inner * powi(t, 1 - 2 * j as i32) * (parity_sign(j as i64) / factorial(r)));
        }
        Ok(Evaluation::sum(parts))
    }
}
