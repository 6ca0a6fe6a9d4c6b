//! Rational weights r(k) = c·Π (a·k + b)^{−e} and their Taylor jets.

use serde::Serialize;

/// Number of Taylor coefficients kept in a jet: enough for f^{(9)}.
pub const JET_LEN: usize = 10;

/// One factor (a·k + b)^{−e} with a > 0 and b ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFactor {
    pub a: f64,
    pub b: f64,
    pub e: u32,
}

impl LinearFactor {
    pub fn new(a: f64, b: f64, e: u32) -> Self {
        debug_assert!(a > 0.0 && b >= 0.0);
        Self { a, b, e }
    }
}

/// A weight r(k) = scale·Π (a k + b)^{−e}, positive and decreasing for k ≥ 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalWeight {
    pub scale: f64,
    pub factors: Vec<LinearFactor>,
}

impl RationalWeight {
    pub fn new(factors: Vec<LinearFactor>) -> Self {
        Self { scale: 1.0, factors }
    }

    /// The constant weight 1.
    pub fn one() -> Self {
        Self::new(Vec::new())
    }

    /// k^{−p}.
    pub fn k_pow(p: u32) -> Self {
        Self::new(vec![LinearFactor::new(1.0, 0.0, p)])
    }

    /// Appends the factor (a k + b)^{−e}; e = 0 is a no-op.
    pub fn times(mut self, a: f64, b: f64, e: u32) -> Self {
        if e > 0 {
            self.factors.push(LinearFactor::new(a, b, e));
        }
        self
    }

    pub fn eval(&self, k: f64) -> f64 {
        self.factors.iter().fold(self.scale, |acc, f| acc * (f.a * k + f.b).powi(-(f.e as i32)))
    }

    /// Total decay exponent: r(k) ~ k^{−degree}.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.e).sum()
    }

    /// scale·Π (a K + b u)^{−e}, so that r(K/u) = u^{degree}·eval_inverted(K, u).
    /// Stays finite as u → 0 where r(K/u) itself underflows.
    pub(crate) fn eval_inverted(&self, big_k: f64, u: f64) -> f64 {
        self.factors.iter().fold(self.scale, |acc, f| acc * (f.a * big_k + f.b * u).powi(-(f.e as i32)))
    }

    /// Taylor coefficients of h ↦ x^{k+h}·r(k+h) at h = 0, i.e. f^{(i)}(k)/i!.
    pub fn jet(&self, x: f64, k: f64) -> [f64; JET_LEN] {
        let mut out = [0.0; JET_LEN];
        // x^{k+h} = x^k · Σ (h ln x)^i / i!
        let lx = x.ln();
        let mut c = x.powf(k);
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = c;
            c *= lx / (i + 1) as f64;
        }
        out.iter_mut().for_each(|v| *v *= self.scale);
        for f in &self.factors {
            // (a k + b + a h)^{−e} = (ak+b)^{−e} · Σ binom(−e, i) (a h/(ak+b))^i
            let base = f.a * k + f.b;
            let ratio = f.a / base;
            let mut series = [0.0; JET_LEN];
            let mut coef = base.powi(-(f.e as i32));
            let e = f.e as f64;
            for (i, slot) in series.iter_mut().enumerate() {
                *slot = coef;
                let i = i as f64;
                coef *= -(e + i) / (i + 1.0) * ratio;
            }
            out = multiply_truncated(&out, &series);
        }
        out
    }
}

fn multiply_truncated(a: &[f64; JET_LEN], b: &[f64; JET_LEN]) -> [f64; JET_LEN] {
    let mut out = [0.0; JET_LEN];
    for i in 0..JET_LEN {
        for j in 0..JET_LEN - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_matches_definition() {
        let w = RationalWeight::k_pow(1).times(2.0, 3.0, 1);
        assert!((w.eval(2.0) - 1.0 / (2.0 * 7.0)).abs() < 1e-16);
        assert_eq!(w.degree(), 2);
        assert_eq!(RationalWeight::one().eval(5.0), 1.0);
    }

    #[test]
    fn jet_matches_finite_differences() {
        let w = RationalWeight::k_pow(2).times(2.0, 1.0, 1);
        let x: f64 = 0.8;
        let f = |t: f64| x.powf(t) * w.eval(t);
        let k = 7.0;
        let jet = w.jet(x, k);
        assert!((jet[0] - f(k)).abs() < 1e-16);
        let h = 1e-4;
        let d1 = (f(k + h) - f(k - h)) / (2.0 * h);
        assert!((jet[1] - d1).abs() < 1e-7 * d1.abs());
        let d2 = (f(k + h) - 2.0 * f(k) + f(k - h)) / (h * h);
        assert!((2.0 * jet[2] - d2).abs() < 1e-5 * d2.abs());
    }

    #[test]
    fn inverted_form_agrees() {
        let w = RationalWeight::k_pow(1).times(2.0, 5.0, 2);
        let (big_k, u) = (10.0, 0.25);
        let t = big_k / u;
        let direct = w.eval(t) * t.powi(w.degree() as i32);
        let inverted = w.eval_inverted(big_k, u) * big_k.powi(w.degree() as i32);
        assert!((direct - inverted).abs() < 1e-15 * direct);
    }
}
