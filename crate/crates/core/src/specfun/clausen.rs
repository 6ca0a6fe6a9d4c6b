//! Clausen functions Cl_n(θ) for integer n ≥ 1.
//!
//! Cl_n(θ) is Σ sin(kθ)/k^n for even n and Σ cos(kθ)/k^n for odd n.
//! Cl₁ has the elementary form −ln|2 sin(θ/2)|. For n ≥ 2 we integrate
//! Cl₁ repeatedly from 0: Cl₂′ = Cl₁, Cl₃′ = −Cl₂, Cl₄′ = Cl₃, and so on,
//! which gives
//!
//! Cl_n(θ) = p_n(θ) ± ∫₀^θ (θ−s)^{n−2}/(n−2)! · ln(2 sin(s/2)) ds
//!
//! with p_n a polynomial whose coefficients are odd zeta values. The kernel
//! integral is done by Gauss–Legendre quadrature after splitting off the
//! ln s endpoint singularity analytically. None of this relies on power
//! series of Cl_n in θ.

use std::f64::consts::{PI, TAU};

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::quadrature::integrate;
use crate::specfun::zeta::zeta_int;
use crate::summation::CompensatedSum;

/// Cl_n(θ) for n ≥ 1 and any real θ (θ ∉ 2πℤ when n = 1).
///
/// # Example
/// ```
/// use zetaseries_core::specfun::clausen;
/// let g = clausen(2, std::f64::consts::FRAC_PI_2).unwrap();
/// assert!((g.value - 0.915_965_594_177_219_0).abs() < 1e-15);
/// ```
pub fn clausen(n: u32, theta: f64) -> Result<Evaluation> {
    if n == 0 {
        return Err(domain("Clausen order must be at least 1"));
    }
    if !theta.is_finite() {
        return Err(domain(format!("Clausen argument {theta} is not finite")));
    }
    let (t, sign) = reduce(n, theta);
    // Rounding of θ mod 2π, scaled by a bound on |Cl_n′| near t.
    let slope = if n <= 2 { 1.0 + t.max(f64::MIN_POSITIVE).ln().abs() } else { 2.0 };
    let reduction_err = EPS * theta.abs().max(1.0) * slope;

    if n == 1 {
        if t == 0.0 {
            return Err(Error::Pole(format!("Cl_1 has a logarithmic pole at {theta}")));
        }
        let v = -(2.0 * (0.5 * t).sin()).ln();
        let reduction_err = EPS * theta.abs().max(1.0) / t;
        return Ok(Evaluation::new(v, 2.0 * EPS * (v.abs() + 1.0) + reduction_err, 1));
    }

    let r = n - 2;
    let poly = polynomial_part(n)?;
    let kernel_sign = kernel_sign(n);
    let mut value = CompensatedSum::new();
    let mut err = reduction_err;
    let mut power = 1.0;
    for (i, c) in poly.iter().enumerate() {
        if i > 0 {
            power *= t;
        }
        value.add(c.value * power);
        err += c.err_bound * power;
    }
    if t > 0.0 {
        let k = kernel(r, t)?;
        value.add(kernel_sign * k.value);
        err += k.err_bound;
    }
    let terms = if t > 0.0 { 1 } else { 0 };
    Ok(Evaluation::new(sign * value.value(), err + value.rounding_bound(), terms.max(1)))
}

/// Reduces θ to [0, π] and returns the sign that parity contributes.
fn reduce(n: u32, theta: f64) -> (f64, f64) {
    let mut t = theta.rem_euclid(TAU);
    if t >= TAU {
        t = 0.0;
    }
    let mut sign = 1.0;
    if t > PI {
        t = TAU - t;
        if n % 2 == 0 {
            sign = -1.0;
        }
    }
    (t, sign)
}

/// Sign in front of the kernel integral: −, +, +, −, −, +, +, … for n = 2, 3, ….
fn kernel_sign(n: u32) -> f64 {
    match (n - 2) % 4 {
        0 | 3 => -1.0,
        _ => 1.0,
    }
}

/// Coefficients of p_n(θ) in increasing powers of θ.
///
/// p₂ = 0; going from odd n to n+1 integrates, going from even n to n+1
/// takes ζ(n+1) minus the integral.
fn polynomial_part(n: u32) -> Result<Vec<Evaluation>> {
    let mut coeffs: Vec<Evaluation> = vec![Evaluation::exact(0.0)];
    for m in 2..n {
        let mut integrated = vec![Evaluation::exact(0.0)];
        for (i, c) in coeffs.iter().enumerate() {
            integrated.push(*c / (i + 1) as f64);
        }
        if m % 2 == 0 {
            let mut next: Vec<Evaluation> = integrated.into_iter().map(|c| -c).collect();
            next[0] = zeta_int(m + 1)?;
            coeffs = next;
        } else {
            coeffs = integrated;
        }
    }
    Ok(coeffs)
}

/// ∫₀^t (t−s)^r/r! · ln(2 sin(s/2)) ds for 0 < t ≤ π.
///
/// ln(2 sin(s/2)) = ln s + g(s) with g(s) = ln(sin(s/2)/(s/2)) smooth on
/// [0, π]; the ln s part integrates to t^{r+1}/(r+1)! · (ln t − H_{r+1}).
fn kernel(r: u32, t: f64) -> Result<Evaluation> {
    let mut fact = 1.0;
    let mut harmonic = 0.0;
    for i in 1..=r + 1 {
        fact *= i as f64;
        harmonic += 1.0 / i as f64;
    }
    let mut r_fact = 1.0;
    for i in 1..=r {
        r_fact *= i as f64;
    }
    let tp = t.powi(r as i32 + 1) / fact;
    let log_part = tp * (t.ln() - harmonic);
    let smooth = integrate(
        |s| (t - s).powi(r as i32) / r_fact * (sinc_minus_one(0.5 * s)).ln_1p(),
        0.0,
        t,
        1e-17 * tp.max(1e-300),
    )?;
    let value = log_part + smooth.value;
    let err = smooth.err_bound + 4.0 * EPS * (log_part.abs() + tp * harmonic);
    Ok(Evaluation::new(value, err, smooth.terms_used))
}

/// sin(h)/h − 1 to full relative precision for 0 ≤ h ≤ π/2, from the
/// alternating series −h²/3! + h⁴/5! − ….
fn sinc_minus_one(h: f64) -> f64 {
    let h2 = h * h;
    let mut term = 1.0;
    let mut acc = 0.0;
    for k in 1..=40u32 {
        let k2 = 2.0 * k as f64;
        term *= -h2 / (k2 * (k2 + 1.0));
        acc += term;
        if term.abs() <= 0.5 * EPS * acc.abs() {
            break;
        }
    }
    acc
}

/// Truncated Fourier series Σ_{k≤K} of Cl_n(θ), n ≥ 2, with the tail bound
/// Σ_{k>K} k^{−n} ≤ 1/((n−1)K^{n−1}).
///
/// Slow but obviously correct; used to cross-check [`clausen`].
pub fn clausen_fourier(n: u32, theta: f64, terms: usize) -> Result<Evaluation> {
    if n < 2 {
        return Err(domain("Fourier summation of Cl_n needs n >= 2"));
    }
    if terms == 0 {
        return Err(domain("Fourier summation needs at least one term"));
    }
    let nf = n as f64;
    let mut acc = CompensatedSum::new();
    for k in 1..=terms {
        let kf = k as f64;
        let arg = kf * theta;
        let trig = if n % 2 == 0 { arg.sin() } else { arg.cos() };
        acc.add(trig / kf.powf(nf));
    }
    let tail = 1.0 / ((nf - 1.0) * (terms as f64).powf(nf - 1.0));
    let arg_err = EPS * theta.abs() * terms as f64;
    Ok(Evaluation::new(acc.value(), tail + arg_err + acc.rounding_bound(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const CATALAN: f64 = 0.915_965_594_177_219;
    const ZETA3: f64 = 1.202_056_903_159_594_2;

    #[test]
    fn classical_special_values() {
        assert!(clausen(2, PI).unwrap().value.abs() < 1e-15);
        assert!((clausen(2, FRAC_PI_2).unwrap().value - CATALAN).abs() < 1e-15);
        assert!((clausen(2, -FRAC_PI_2).unwrap().value + CATALAN).abs() < 1e-15);
        assert!((clausen(3, TAU).unwrap().value - ZETA3).abs() < 1e-15);
        assert!((clausen(3, PI).unwrap().value + 0.75 * ZETA3).abs() < 1e-15);
    }

    #[test]
    fn order_one_pole() {
        assert!(matches!(clausen(1, 0.0), Err(Error::Pole(_))));
        assert!(matches!(clausen(1, TAU), Err(Error::Pole(_))));
        assert!((clausen(1, PI).unwrap().value + 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn agrees_with_fourier_sums() {
        for n in 2..=8 {
            for &theta in &[0.3, 1.0, 2.0, 3.0, 4.5, -1.2] {
                let q = clausen(n, theta).unwrap_or_else(|e| panic!("n={n} theta={theta}: {e}"));
                let f = clausen_fourier(n, theta, 200_000).unwrap();
                assert!((q.value - f.value).abs() <= q.err_bound + f.err_bound, "n={n} theta={theta}");
            }
        }
    }

    #[test]
    fn error_bounds_are_tight() {
        for n in 2..=13 {
            for &theta in &[1e-6, 0.5, 2.5, PI] {
                let q = clausen(n, theta).unwrap();
                assert!(q.err_bound < 5e-14, "n={n} theta={theta} err={}", q.err_bound);
            }
        }
    }

    #[test]
    fn fourier_bound_covers_four_times_more_terms() {
        for n in 2..=5 {
            let a = clausen_fourier(n, 1.3, 500).unwrap();
            let b = clausen_fourier(n, 1.3, 2000).unwrap();
            assert!((a.value - b.value).abs() <= a.err_bound);
        }
    }

    #[test]
    fn value_at_zero() {
        assert_eq!(clausen(2, 0.0).unwrap().value, 0.0);
        assert!((clausen(5, 0.0).unwrap().value - 1.036_927_755_143_37).abs() < 1e-15);
    }
}
