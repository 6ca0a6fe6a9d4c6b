//! Finite closed forms at z = 1 and z = 1/2, where the Clausen values
//! collapse to odd zeta values.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::evaluation::Evaluation;

use super::{factorial, parity_sign, ClosedForms};

/// The two arguments with finite zeta-value evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UnitPoint {
    /// z = 1.
    One,
    /// z = 1/2.
    Half,
}

impl UnitPoint {
    pub fn z(self) -> f64 {
        match self {
            UnitPoint::One => 1.0,
            UnitPoint::Half => 0.5,
        }
    }
}

impl ClosedForms<'_> {
    /// (Σ ζ(2k) z^{2k}/(k(k+n)), Σ ζ(2k) z^{2k}/(k(2k−1+2n))) at z = 1 or z = 1/2.
    ///
    /// At z = 1:
    /// −1/(2n²) + ln(2π)/n − 2(2n−1)! Σ_{j=1}^{n−1} (−1)^j ζ(2j+1)/((2π)^{2j}(2n−2j)!) and
    /// −1/(2n−1)² + ln(2π)/(2n−1) − (2n−2)! Σ_{j=1}^{n−1} (−1)^j ζ(2j+1)/((2π)^{2j}(2n−2j−1)!).
    ///
    /// At z = 1/2:
    /// ln π/n − 1/(2n²) + (−1)^n (2n)! (2^{2n+1}−1) ζ(2n+1)/((2π)^{2n} n)
    /// + 2(2n−1)! Σ_{j=1}^{n−1} (−1)^j (2^{2j}−1) ζ(2j+1)/((2π)^{2j}(2n−2j)!) and
    ///   ln π/(2n−1) − 1/(2n−1)² + (2n−2)! Σ_{j=1}^{n−1} (−1)^j (2^{2j}−1) ζ(2j+1)/((2π)^{2j}(2n−1−2j)!).
    pub fn eval_unit_grids(&self, n: u32, which: UnitPoint) -> Result<(Evaluation, Evaluation)> {
        if n == 0 {
            return Err(domain("unit-argument sums need n >= 1"));
        }
        let nf = n as f64;
        let odd = 2.0 * nf - 1.0;
        let two_pi = 2.0 * self.pi();
        let mut first = Vec::new();
        let mut second = Vec::new();
        match which {
            UnitPoint::One => {
                let l = Evaluation::ln_of(two_pi);
                first.push(Evaluation::rounded(-0.5 / (nf * nf)));
                first.push(l / nf);
                second.push(Evaluation::rounded(-1.0 / (odd * odd)));
                second.push(l / odd);
                for j in 1..n {
                    let base = self.zeta(2 * j + 1)? * (parity_sign(j as i64) / two_pi.powi(2 * j as i32));
                    first.push(base * (-2.0 * factorial(2 * n - 1) / factorial(2 * n - 2 * j)));
                    second.push(base * (-factorial(2 * n - 2) / factorial(2 * n - 2 * j - 1)));
                }
            }
            UnitPoint::Half => {
                let l = Evaluation::ln_of(self.pi());
                first.push(l / nf);
                first.push(Evaluation::rounded(-0.5 / (nf * nf)));
                let lead = parity_sign(n as i64) * factorial(2 * n) * (2f64.powi(2 * n as i32 + 1) - 1.0)
                    / (two_pi.powi(2 * n as i32) * nf);
                first.push(self.zeta(2 * n + 1)? * lead);
                second.push(l / odd);
                second.push(Evaluation::rounded(-1.0 / (odd * odd)));
                for j in 1..n {
                    let scale = parity_sign(j as i64) * (4f64.powi(j as i32) - 1.0) / two_pi.powi(2 * j as i32);
                    let base = self.zeta(2 * j + 1)? * scale;
                    first.push(base * (2.0 * factorial(2 * n - 1) / factorial(2 * n - 2 * j)));
                    second.push(base * (factorial(2 * n - 2) / factorial(2 * n - 1 - 2 * j)));
                }
            }
        }
        Ok((Evaluation::sum(first), Evaluation::sum(second)))
    }

    /// Σ ζ(2k)/(k(2k+m)(2k+n)) at z = 1 for m ≠ n.
    ///
    /// With S(q, J) = (q−1)! Σ_{j=1}^{J} (−1)^j ζ(2j+1)/((q−2j)!(2π)^{2j}):
    ///
    /// * m, n of equal parity:
    ///   −(m+n)/(mn)² + ln(2π)/(mn) + [S(m, ⌊m/2⌋) − S(n, ⌊n/2⌋)]/(m−n),
    ///   minus [(−1)^{m/2}(m−1)!ζ(m+1)/(2π)^m − (−1)^{n/2}(n−1)!ζ(n+1)/(2π)^n]/(m−n)
    ///   when both are even;
    /// * m even, n odd (either order):
    ///   −(m+n)/(mn)² + ln(2π)/(mn) − (−1)^{m/2}(m−1)!ζ(m+1)/((m−n)(2π)^m)
    ///   + [S(m, m/2) − S(n, (n−1)/2)]/(m−n).
    pub fn eval_pmn_unit(&self, m: u32, n: u32) -> Result<Evaluation> {
        if m == 0 || n == 0 || m == n {
            return Err(domain("unit-argument P(m, n) needs distinct m, n >= 1"));
        }
        // The expressions are symmetric in (m, n); put the even one first
        // in the mixed-parity case.
        let (m, n) = if m % 2 == 1 && n % 2 == 0 { (n, m) } else { (m, n) };
        let (mf, nf) = (m as f64, n as f64);
        let two_pi = 2.0 * self.pi();
        let diff = mf - nf;
        let mut parts =
            vec![Evaluation::rounded(-(mf + nf) / (mf * nf * mf * nf)), Evaluation::ln_of(two_pi) / (mf * nf)];
        let even_lead = |q: u32| -> Result<Evaluation> {
            let s = parity_sign((q / 2) as i64) * factorial(q - 1) / two_pi.powi(q as i32);
            Ok(self.zeta(q + 1)? * s)
        };
        let same_parity = m % 2 == n % 2;
        if same_parity {
            if m % 2 == 0 {
                parts.push(-(even_lead(m)? / diff));
                parts.push(even_lead(n)? / diff);
            }
            parts.push(self.odd_zeta_block(m, m / 2)? / diff);
            parts.push(-(self.odd_zeta_block(n, n / 2)? / diff));
        } else {
            parts.push(-(even_lead(m)? / diff));
            parts.push(self.odd_zeta_block(m, m / 2)? / diff);
            parts.push(-(self.odd_zeta_block(n, (n - 1) / 2)? / diff));
        }
        Ok(Evaluation::sum(parts))
    }

    /// (q−1)! Σ_{j=1}^{top} (−1)^j ζ(2j+1)/((q−2j)!(2π)^{2j}).
    fn odd_zeta_block(&self, q: u32, top: u32) -> Result<Evaluation> {
        let two_pi = 2.0 * self.pi();
        let mut parts = Vec::new();
        for j in 1..=top {
            let s = parity_sign(j as i64) * factorial(q - 1) / (factorial(q - 2 * j) * two_pi.powi(2 * j as i32));
            parts.push(self.zeta(2 * j + 1)? * s);
        }
        Ok(Evaluation::sum(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ZETA3: f64 = 1.202_056_903_159_594_2;
    const ZETA5: f64 = 1.036_927_755_143_37;

    #[test]
    fn unit_argument_values() {
        let cf = ClosedForms::standard();
        let l = (2.0 * PI).ln();
        let (a, b) = cf.eval_unit_grids(1, UnitPoint::One).unwrap();
        assert!((a.value - (l - 0.5)).abs() < 1e-15);
        assert!((b.value - (l - 1.0)).abs() < 1e-15);
        let (a, b) = cf.eval_unit_grids(2, UnitPoint::One).unwrap();
        assert!((a.value - (-1.0 / 8.0 + l / 2.0 + 3.0 * ZETA3 / (2.0 * PI * PI))).abs() < 1e-15);
        assert!((b.value - (-1.0 / 9.0 + l / 3.0 + ZETA3 / (2.0 * PI * PI))).abs() < 1e-15);
    }

    #[test]
    fn half_argument_values() {
        let cf = ClosedForms::standard();
        let l = PI.ln();
        let (a, b) = cf.eval_unit_grids(1, UnitPoint::Half).unwrap();
        assert!((a.value - (-0.5 + l - 7.0 * ZETA3 / (2.0 * PI * PI))).abs() < 1e-15);
        assert!((b.value - (l - 1.0)).abs() < 1e-15);
        let (a, b) = cf.eval_unit_grids(2, UnitPoint::Half).unwrap();
        let expect = -1.0 / 8.0 + l / 2.0 - 9.0 * ZETA3 / (2.0 * PI * PI) + 93.0 * ZETA5 / (4.0 * PI.powi(4));
        assert!((a.value - expect).abs() < 1e-15);
        assert!((b.value - (-1.0 / 9.0 + l / 3.0 - 3.0 * ZETA3 / (2.0 * PI * PI))).abs() < 1e-15);
    }

    #[test]
    fn two_parameter_unit_values() {
        let cf = ClosedForms::standard();
        let l = (2.0 * PI).ln();
        let p2 = PI * PI;
        let cases = [
            (1, 3, -4.0 / 9.0 + l / 3.0 - ZETA3 / (4.0 * p2)),
            // 1/(k(k+1)(k+2)) = 4/(k(2k+2)(2k+4))
            (2, 4, (-3.0 / 8.0 + l / 2.0 - 3.0 * ZETA3 / (2.0 * p2)) / 4.0),
            // 1/(k(k+2)(2k+3)) = 2/(k(2k+4)(2k+3))
            (4, 3, (-7.0 / 72.0 + l / 6.0 - ZETA3 / (2.0 * p2)) / 2.0),
            (3, 4, (-7.0 / 72.0 + l / 6.0 - ZETA3 / (2.0 * p2)) / 2.0),
            (3, 5, -8.0 / 225.0 + l / 15.0 - ZETA3 / (4.0 * p2) + 3.0 * ZETA5 / (4.0 * p2 * p2)),
            // 1/(k(k+1)(2k+5)) = 2/(k(2k+2)(2k+5))
            (2, 5, (-7.0 / 50.0 + l / 5.0 - 2.0 * ZETA3 / (3.0 * p2) + ZETA5 / (p2 * p2)) / 2.0),
        ];
        for (m, n, expect) in cases {
            let v = cf.eval_pmn_unit(m, n).unwrap();
            assert!((v.value - expect).abs() < 1e-15, "m={m} n={n}: {} vs {expect}", v.value);
        }
        assert!(cf.eval_pmn_unit(2, 2).is_err());
    }
}
