//! Cohen–Rodriguez Villegas–Zagier acceleration of alternating series.
//!
//! For S = Σ_{k≥0} (−1)^k a_k with (a_k) a moment sequence of a positive
//! measure on [0, 1] (totally monotone), `count` terms give
//! |S − S_count| ≤ 2·a_0/d_count with d_n ≥ (3+√8)^n / 2.

use crate::error::{Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::summation::CompensatedSum;

/// Convergence factor 3 + √8 ≈ 5.83 per term.
pub const CVZ_RATE: f64 = 5.828_427_124_746_19;

/// Number of terms after which the truncation bound falls below `tol·|a_0|`.
pub fn cvz_count_for(tol: f64) -> usize {
    let n = (4.0 / tol.max(1e-300)).ln() / CVZ_RATE.ln();
    (n.ceil() as usize).clamp(1, 200)
}

/// Sums an alternating series given by its signed terms.
///
/// `term(k)` returns the k-th signed term for k = 0, 1, …. Consecutive
/// nonzero terms must alternate in sign, otherwise a contract violation is
/// reported. The bound assumes the magnitudes form a totally monotone
/// sequence; that property is the caller's responsibility.
pub fn cvz_accelerate<F: FnMut(usize) -> f64>(mut term: F, count: usize) -> Result<Evaluation> {
    if count == 0 {
        return Err(Error::ContractViolation("CVZ needs at least one term".into()));
    }
    let mut mags = Vec::with_capacity(count);
    let mut lead_sign = 0.0;
    let mut prev = 0.0f64;
    for k in 0..count {
        let t = term(k);
        if !t.is_finite() {
            return Err(Error::ContractViolation(format!("term {k} is not finite")));
        }
        if t != 0.0 && prev != 0.0 && t.signum() == prev.signum() {
            return Err(Error::ContractViolation(format!(
                "terms {} and {k} have the same sign; series is not alternating",
                k - 1
            )));
        }
        if lead_sign == 0.0 && t != 0.0 {
            // Orient the sequence so that index 0 carries a positive sign.
            lead_sign = if k % 2 == 0 { t.signum() } else { -t.signum() };
        }
        prev = t;
        mags.push(t.abs());
    }
    if lead_sign == 0.0 {
        return Ok(Evaluation::new(0.0, 0.0, count));
    }
    let n = count as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = CompensatedSum::new();
    // The weights c_k come from a recurrence, so the k-th carries about k
    // roundings; weight each product accordingly.
    let mut weighted = 0.0;
    for (k, a) in mags.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s.add(c * a);
        weighted += (kf + 2.0) * (c * a).abs();
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    let value = lead_sign * s.value() / d;
    let a0 = mags[0].max(mags.iter().cloned().fold(0.0, f64::max));
    let truncation = 2.0 * a0 / d;
    let rounding = 2.0 * EPS * weighted / d + s.rounding_bound() / d + EPS * value.abs();
    Ok(Evaluation::new(value, truncation + rounding, count))
}
