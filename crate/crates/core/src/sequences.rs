//! Bernoulli ratios, Fibonacci/Lucas weights, Binet constants and harmonic
//! numbers.

use std::f64::consts::TAU;

use crate::error::{domain, Error, Result};
use crate::specfun::zeta_eta;

/// Exact even-index Bernoulli numbers B_0, B_2, …, B_30 as (numerator, denominator).
pub const BERNOULLI_EVEN: [(i64, i64); 16] = [
    (1, 1),
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
];

/// Largest k for which the raw B_{2k} is handed out.
pub const MAX_RAW_BERNOULLI: usize = 15;

/// Golden ratio α, its conjugate β and √5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetConstants {
    pub alpha: f64,
    pub beta: f64,
    pub sqrt5: f64,
}

#[allow(clippy::excessive_precision)]
pub const BINET: BinetConstants =
    BinetConstants { alpha: 1.618033988749894848205, beta: -0.618033988749894848205, sqrt5: 2.236067977499789696409 };

impl BinetConstants {
    /// Radius of convergence 1/α of the Fibonacci- and Lucas-weighted series.
    pub fn radius(&self) -> f64 {
        -self.beta
    }
}

/// Harmonic numbers H_0 = 0, H_1, …, H_max.
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    values: Vec<f64>,
}

impl HarmonicCache {
    pub fn new(max: usize) -> Self {
        let mut values = Vec::with_capacity(max + 1);
        values.push(0.0);
        for n in 1..=max {
            values.push(values[n - 1] + 1.0 / n as f64);
        }
        Self { values }
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }
}

/// H_n computed on the fly.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

/// Which Bernoulli quantity [`bernoulli_ratio`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliScale {
    /// B_{2k} itself; only for k ≤ 15.
    Raw,
    /// B_{2k}/(2k)!.
    OverFactorial,
    /// B_{2k}/(2k+1)!.
    OverFactorialPlusOne,
}

/// B_{2k} in the requested scaling.
///
/// The scaled forms come from B_{2k}/(2k)! = (−1)^{k+1}·2ζ(2k)/(2π)^{2k}
/// with ζ(2k) from the eta series, so no large numerator or factorial is
/// ever formed.
pub fn bernoulli_ratio(k: usize, scale: BernoulliScale) -> Result<f64> {
    if k == 0 {
        return Err(domain("bernoulli_ratio needs k >= 1"));
    }
    if scale == BernoulliScale::Raw {
        if k > MAX_RAW_BERNOULLI {
            return Err(Error::Overflow(format!(
                "raw B_{} is only provided for k <= {MAX_RAW_BERNOULLI}; use a scaled ratio",
                2 * k
            )));
        }
        let (num, den) = BERNOULLI_EVEN[k];
        return Ok(num as f64 / den as f64);
    }
    let two_k = 2 * k;
    let zeta = zeta_eta(two_k as u32)?.value;
    let inv_pow = if two_k <= 300 { TAU.powi(-(two_k as i32)) } else { (-(two_k as f64) * TAU.ln()).exp() };
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let ratio = sign * 2.0 * zeta * inv_pow;
    Ok(match scale {
        BernoulliScale::OverFactorial => ratio,
        BernoulliScale::OverFactorialPlusOne => ratio / (two_k + 1) as f64,
        BernoulliScale::Raw => unreachable!(),
    })
}

/// (F_{2k} z^{2k}, L_{2k} z^{2k}) from the Binet form, for |z| ≤ 1/α.
///
/// # Example
/// ```
/// use zetaseries_core::sequences::fib_lucas_weighted;
/// let (f, l) = fib_lucas_weighted(5, 0.5).unwrap();
/// assert!((f - 55.0 / 1024.0).abs() < 1e-15 && (l - 123.0 / 1024.0).abs() < 1e-15);
/// ```
pub fn fib_lucas_weighted(k: usize, z: f64) -> Result<(f64, f64)> {
    if k == 0 {
        return Err(domain("fib_lucas_weighted needs k >= 1"));
    }
    fib_lucas_unchecked_domain(k, z, true)
}

/// Same as [`fib_lucas_weighted`] but without the radius check, for the
/// direct-sum test fixtures at z = 1.
pub fn fib_lucas_any(k: usize, z: f64) -> (f64, f64) {
    fib_lucas_unchecked_domain(k, z, false).expect("no domain check requested")
}

fn fib_lucas_unchecked_domain(k: usize, z: f64, check: bool) -> Result<(f64, f64)> {
    if check && (z.is_nan() || z.abs() > BINET.radius() * (1.0 + 1e-12)) {
        return Err(domain(format!(
            "|z| = {} exceeds the radius 1/alpha = {} of the Fibonacci-weighted series",
            z.abs(),
            BINET.radius()
        )));
    }
    let e = 2 * k as i32;
    let a = (BINET.alpha * z).powi(e);
    let b = (BINET.beta * z).powi(e);
    Ok(((a - b) / BINET.sqrt5, a + b))
}
