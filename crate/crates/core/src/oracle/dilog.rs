//! Σ_{t≥1} Li_p(−(z/t)²), the power sums Σ_k (−1)^k ζ(2k) z^{2k}/k^p in
//! another guise.
//!
//! With u = (z/t)² the summand is −u + u²/2^p + R_p(u), |R_p(u)| ≤ u³/3^p.
//! The two leading pieces sum in closed form to −z²ζ(2) + z⁴ζ(4)/2^p, so
//! only R_p is summed over t, and its tail past T is at most z⁶/(5·3^p·T⁵).

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::specfun::{polylog, zeta_int};
use crate::summation::CompensatedSum;

/// Below this u the remainder R_p(u) is summed from its own power series.
const SERIES_BELOW: f64 = 0.25;

/// Σ_{t≥1} Li_p(−(z/t)²) for p ≥ 1 and |z| ≤ 1 with error at most `tol`.
pub fn dilog_sum(p: u32, z: f64, tol: f64, budget: usize) -> Result<Evaluation> {
    if p == 0 {
        return Err(domain("DilogSum needs p >= 1"));
    }
    if z.is_nan() || z.abs() > 1.0 || z == 0.0 {
        return Err(domain(format!("DilogSum needs 0 < |z| <= 1, got {z}")));
    }
    let z2 = z * z;
    let pow2 = 2f64.powi(p as i32);
    let pow3 = 3f64.powi(p as i32);
    let tail_at = |t: f64| z2 * z2 * z2 / (5.0 * pow3 * t.powi(5));
    let needed = (z2 * z2 * z2 / (5.0 * pow3 * 0.5 * tol)).powf(0.2).ceil().max(1.0);
    if needed > budget as f64 {
        return Err(Error::BudgetExceeded { budget, best_bound: tail_at(budget as f64) });
    }
    let big_t = needed as usize;

    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    for t in 1..=big_t {
        let u = z2 / (t * t) as f64;
        let r = remainder(p, u, pow2)?;
        acc.add(r.value);
        err += r.err_bound;
    }
    let z_2 = zeta_int(2)?;
    let z_4 = zeta_int(4)?;
    let lead = -z2 * z_2.value + z2 * z2 * z_4.value / pow2;
    acc.add(lead);
    err += z2 * z_2.err_bound + z2 * z2 * z_4.err_bound / pow2 + 4.0 * EPS * lead.abs();
    Ok(Evaluation::new(acc.value(), err + tail_at(big_t as f64) + acc.rounding_bound(), big_t))
}

/// R_p(u) = Li_p(−u) + u − u²/2^p for 0 < u ≤ 1.
fn remainder(p: u32, u: f64, pow2: f64) -> Result<Evaluation> {
    if u <= SERIES_BELOW {
        // Σ_{k≥3} (−1)^k u^k / k^p: alternating with decreasing terms.
        let mut acc = CompensatedSum::new();
        let mut uk = u * u;
        let mut k = 3u32;
        loop {
            uk *= u;
            let term = uk / (k as f64).powi(p as i32);
            if term <= 0.25 * EPS * acc.value().abs() || term < 1e-300 {
                return Ok(Evaluation::new(acc.value(), term + acc.rounding_bound(), k as usize));
            }
            acc.add(if k % 2 == 1 { -term } else { term });
            k += 1;
        }
    }
    let li = polylog(p, -u)?;
    let v = li.value + u - u * u / pow2;
    Ok(Evaluation::new(v, li.err_bound + 4.0 * EPS * (li.value.abs() + u), li.terms_used))
}
