//! Riemann zeta at integer arguments.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use crate::acceleration::cvz_accelerate;
use crate::error::{domain, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::sequences::BERNOULLI_EVEN;
use crate::summation::CompensatedSum;

/// CVZ terms used for the eta series; the truncation bound is below 1e-30.
const ETA_TERMS: usize = 42;

/// ζ(s) for integer s ≥ 2.
///
/// Even s ≤ 30 use the exact Bernoulli rationals in
/// ζ(2n) = (−1)^{n+1}(2π)^{2n}B_{2n}/(2(2n)!); every other argument goes
/// through the accelerated eta series.
///
/// # Example
/// ```
/// use zetaseries_core::specfun::zeta_int;
/// let z3 = zeta_int(3).unwrap();
/// assert!((z3.value - 1.2020569031595942).abs() < 1e-15);
/// ```
pub fn zeta_int(s: u32) -> Result<Evaluation> {
    if s < 2 {
        return Err(domain(format!("zeta_int needs s >= 2, got {s}")));
    }
    if s % 2 == 0 && ((s / 2) as usize) < BERNOULLI_EVEN.len() {
        let n = (s / 2) as usize;
        let (num, den) = BERNOULLI_EVEN[n];
        let b = (num as f64 / den as f64).abs();
        let mut fact = 1.0;
        for i in 2..=s {
            fact *= i as f64;
        }
        let value = TAU.powi(s as i32) * b / (2.0 * fact);
        return Ok(Evaluation::new(value, (s as f64 + 6.0) * EPS * value, 0));
    }
    zeta_eta(s)
}

/// ζ(s) = η(s)/(1 − 2^{1−s}) with η summed by CVZ acceleration.
///
/// This route never touches Bernoulli numbers and so serves as an
/// independent check of the even values.
pub fn zeta_eta(s: u32) -> Result<Evaluation> {
    if s < 2 {
        return Err(domain(format!("zeta_eta needs s >= 2, got {s}")));
    }
    let sf = s as f64;
    let eta = cvz_accelerate(
        |k| {
            let t = ((k + 1) as f64).powf(-sf);
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        },
        ETA_TERMS,
    )?;
    let factor = 1.0 - 2f64.powi(1 - s as i32);
    let value = eta.value / factor;
    Ok(Evaluation::new(value, eta.err_bound / factor + 2.0 * EPS * value, eta.terms_used))
}

/// ζ(s) − 1 without cancellation, for integer s ≥ 2.
pub fn zeta_minus_one(s: u32) -> Result<Evaluation> {
    if s < 2 {
        return Err(domain(format!("zeta_minus_one needs s >= 2, got {s}")));
    }
    if s < 16 {
        let z = zeta_int(s)?;
        return Ok(Evaluation::new(z.value - 1.0, z.err_bound + EPS, z.terms_used));
    }
    Ok(direct_zeta_tail(s))
}

/// Σ_{j≥2} j^{−s} by direct summation, stopped once the integral tail
/// J^{1−s}/(s−1) drops below ε times the partial sum.
fn direct_zeta_tail(s: u32) -> Evaluation {
    let sf = s as f64;
    let mut acc = CompensatedSum::new();
    let mut j = 2u32;
    loop {
        acc.add((j as f64).powf(-sf));
        let tail = (j as f64 + 0.5).powf(1.0 - sf) / (sf - 1.0);
        if tail <= 0.25 * EPS * acc.value() || j > 100_000 {
            return Evaluation::new(acc.value(), tail + acc.rounding_bound(), (j - 1) as usize);
        }
        j += 1;
    }
}

const CACHED_EVEN: usize = 1024;

/// ζ(2k) − 1 for k ≥ 1, served from a lazily built cache for k ≤ 1024.
///
/// Relative accuracy is a few ulp; beyond the cache the value 4^{−k}
/// dominates and is computed on the fly.
pub fn zeta_even_minus_one(k: usize) -> f64 {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    assert!(k >= 1, "zeta_even_minus_one needs k >= 1");
    let cache = CACHE.get_or_init(|| {
        (0..=CACHED_EVEN)
            .map(|k| if k == 0 { f64::NAN } else { zeta_minus_one(2 * k as u32).map(|e| e.value).unwrap_or(f64::NAN) })
            .collect()
    });
    if k <= CACHED_EVEN {
        cache[k]
    } else {
        let s = 2.0 * k as f64;
        2f64.powf(-s) + 3f64.powf(-s)
    }
}
