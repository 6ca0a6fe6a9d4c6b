//! Incomplete gamma at integer order, the entire exponential integral Ein,
//! and the trigamma function on (0, 1].

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::specfun::constants::STANDARD;
use crate::summation::CompensatedSum;

/// Below this argument Ein uses its power series, above it γ + ln x + E1(x).
///
/// The power series alternates with terms as large as e^x/x before they
/// decay, so its cancellation error grows like ε·e^x; at x = 2 that is
/// still under 1e-15, and the continued fraction for E1 converges in a few
/// dozen steps from there on.
pub const EIN_SWITCH: f64 = 2.0;

/// Shift depth for the trigamma recurrence before the asymptotic tail.
pub const TRIGAMMA_SHIFT: u32 = 20;

/// Γ(j, x) = (j−1)! e^{−x} Σ_{i<j} x^i/i! for integer j ≥ 1 and x ≥ 0.
pub fn inc_gamma_int(j: u32, x: f64) -> Result<Evaluation> {
    if j == 0 {
        return Err(domain("inc_gamma_int needs order j >= 1"));
    }
    if x.is_nan() || x < 0.0 || !x.is_finite() {
        return Err(domain(format!("inc_gamma_int needs finite x >= 0, got {x}")));
    }
    let mut acc = CompensatedSum::new();
    let mut term = 1.0;
    let mut fact = 1.0;
    for i in 0..j {
        if i > 0 {
            term *= x / i as f64;
            fact *= i as f64;
        }
        acc.add(term);
    }
    let scale = fact * (-x).exp();
    let value = scale * acc.value();
    let err = 4.0 * EPS * value.abs() * (1.0 + j as f64 * 0.25) + scale * acc.rounding_bound();
    Ok(Evaluation::new(value, err, j as usize))
}

/// Ein(x) = ∫₀^x (1 − e^{−t})/t dt for x ≥ 0.
///
/// # Example
/// ```
/// use zetaseries_core::specfun::ein;
/// assert!((ein(1.0).unwrap().value - 0.796_599_599_297_053_1).abs() < 1e-15);
/// ```
pub fn ein(x: f64) -> Result<Evaluation> {
    if x.is_nan() || x < 0.0 || x.is_infinite() {
        return Err(domain(format!("ein needs finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(Evaluation::exact(0.0));
    }
    if x <= EIN_SWITCH {
        return Ok(ein_series(x));
    }
    let e1 = exp_integral_e1(x)?;
    let value = STANDARD.euler_gamma + x.ln() + e1.value;
    let err = e1.err_bound + 4.0 * EPS * (value.abs() + 1.0);
    Ok(Evaluation::new(value, err, e1.terms_used))
}

fn ein_series(x: f64) -> Evaluation {
    let mut acc = CompensatedSum::new();
    let mut pow_over_fact = 1.0;
    let mut k = 1usize;
    loop {
        pow_over_fact *= x / k as f64;
        let t = pow_over_fact / k as f64;
        acc.add(if k % 2 == 1 { t } else { -t });
        // Alternating with decreasing terms once k > x: the next term bounds the tail.
        let next = pow_over_fact * x / ((k + 1) as f64 * (k + 1) as f64);
        if k as f64 > x && next <= 0.25 * EPS * acc.value().abs() {
            return Evaluation::new(acc.value(), next + 2.0 * EPS * acc.magnitude(), k);
        }
        k += 1;
    }
}

/// E1(x) = ∫_x^∞ e^{−t}/t dt by the modified Lentz continued fraction,
/// valid for x ≥ 1.
pub fn exp_integral_e1(x: f64) -> Result<Evaluation> {
    if x.is_nan() || x < 1.0 {
        return Err(domain(format!("continued fraction for E1 needs x >= 1, got {x}")));
    }
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=1000usize {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() <= EPS {
            let value = h * (-x).exp();
            return Ok(Evaluation::new(value, 4.0 * EPS * value * (1.0 + (i as f64).sqrt()), i));
        }
    }
    Err(Error::BudgetExceeded { budget: 1000, best_bound: f64::NAN })
}

/// ψ′(q) = Σ_{n≥0} 1/(q+n)² for 0 < q ≤ 1.
///
/// Sums the first [`TRIGAMMA_SHIFT`] terms directly and the rest by the
/// asymptotic expansion at x = q + 20:
/// 1/x + 1/(2x²) + 1/(6x³) − 1/(30x⁵) + 1/(42x⁷) − 1/(30x⁹).
pub fn trigamma(q: f64) -> Result<Evaluation> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain(format!("trigamma is implemented for 0 < q <= 1, got {q}")));
    }
    let mut acc = CompensatedSum::new();
    for n in 0..TRIGAMMA_SHIFT {
        let t = q + n as f64;
        acc.add(1.0 / (t * t));
    }
    let x = q + TRIGAMMA_SHIFT as f64;
    let r = 1.0 / x;
    let r2 = r * r;
    let tail = r * (1.0 + r * (0.5 + r * (1.0 / 6.0 + r2 * (-1.0 / 30.0 + r2 * (1.0 / 42.0 - r2 / 30.0)))));
    acc.add(tail);
    // First omitted term: 5/(66 x^11).
    let trunc = 5.0 / 66.0 * r.powi(11);
    Ok(Evaluation::new(acc.value(), trunc + acc.rounding_bound() + EPS * tail, TRIGAMMA_SHIFT as usize + 6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn incomplete_gamma_special_cases() {
        for &x in &[0.0, 0.3, 5.0, 40.0] {
            let v = inc_gamma_int(1, x).unwrap().value;
            assert!((v - (-x).exp()).abs() <= 2.0 * EPS * (-x).exp());
        }
        let mut f = 1.0;
        for j in 1..10u32 {
            if j > 1 {
                f *= (j - 1) as f64;
            }
            assert_eq!(inc_gamma_int(j, 0.0).unwrap().value, f);
        }
    }

    #[test]
    fn incomplete_gamma_three_at_two_pi() {
        let v = inc_gamma_int(3, TAU).unwrap();
        let expect = 2.0 * (-TAU).exp() * (1.0 + TAU + TAU * TAU / 2.0);
        assert!((v.value - expect).abs() <= v.err_bound.max(4.0 * EPS * expect));
        // ∫_{2π}^∞ t² e^{−t} dt by quadrature on the mapped interval.
        let q = crate::quadrature::integrate(
            |u| {
                if u <= 0.0 {
                    return 0.0;
                }
                let t = TAU / u;
                t * t * (-t).exp() * TAU / (u * u)
            },
            0.0,
            1.0,
            1e-16,
        )
        .unwrap();
        assert!((q.value - v.value).abs() < 1e-13);
    }

    #[test]
    fn ein_values() {
        assert_eq!(ein(0.0).unwrap().value, 0.0);
        let v = ein(1.0).unwrap();
        assert!((v.value - 0.796_599_599_297_053_2).abs() < 1e-15);
        let gamma = STANDARD.euler_gamma;
        let v50 = ein(50.0).unwrap().value;
        assert!((v50 - (gamma + 50f64.ln())).abs() < 1e-14);
        assert!(ein(-1.0).is_err());
    }

    #[test]
    fn ein_is_continuous_across_switch() {
        let below = ein_series(EIN_SWITCH);
        let above = STANDARD.euler_gamma + EIN_SWITCH.ln() + exp_integral_e1(EIN_SWITCH).unwrap().value;
        assert!((below.value - above).abs() < 2e-15);
        for &x in &[2.5, 5.0, 10.0, 29.0] {
            let s = ein_series(x);
            let c = ein(x).unwrap();
            assert!((s.value - c.value).abs() <= s.err_bound + c.err_bound + 1e-16 * x.exp(), "x={x}");
        }
    }

    #[test]
    fn trigamma_classical_values() {
        let t1 = trigamma(1.0).unwrap();
        assert!((t1.value - PI * PI / 6.0).abs() < 1e-14);
        let th = trigamma(0.5).unwrap();
        assert!((th.value - PI * PI / 2.0).abs() < 1e-14);
        assert!(t1.err_bound < 1e-13);
        assert!(trigamma(0.0).is_err());
    }

    #[test]
    fn trigamma_third_against_long_sum() {
        let q = 1.0 / 3.0;
        let n = 1_000_000;
        let s: CompensatedSum = (0..n).map(|k| 1.0 / ((q + k as f64) * (q + k as f64))).collect();
        // Σ_{k≥N} 1/(q+k)² lies between 1/(q+N) and 1/(q+N−1).
        let tail_lo = 1.0 / (q + n as f64);
        let tail_hi = 1.0 / (q + n as f64 - 1.0);
        let v = trigamma(q).unwrap().value;
        assert!(v >= s.value() + tail_lo - 1e-13 && v <= s.value() + tail_hi + 1e-13);
        assert!((v - 10.095_597_125_427_094).abs() < 1e-13);
    }
}
