//! Euler–Maclaurin summation of Σ_{k≥1} x^k r(k) for positive terms.
//!
//! With f(t) = x^t r(t) the first K−1 terms are added directly and the rest is
//!
//! Σ_{k≥K} f(k) = ∫_K^∞ f + f(K)/2 − Σ_{j=1}^{4} B_{2j}/(2j)! · f^{(2j−1)}(K) + R.
//!
//! f is completely monotone for 0 < x ≤ 1, so |R| is bounded by the first
//! omitted correction |B_10/10! · f^{(9)}(K)|. Derivatives come from the
//! Taylor jet of f at K. The integral is mapped to (0, 1] by t = K/u and done
//! by adaptive Gauss–Legendre quadrature.

use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::quadrature::integrate;
use crate::summation::CompensatedSum;

use super::weight::RationalWeight;

/// B_{2j}/(2j)! for j = 1..=5.
const CORRECTIONS: [f64; 5] = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0];

/// 1!, 3!, 5!, 7!: converts jet coefficients to derivatives.
const ODD_FACTORIALS: [f64; 4] = [1.0, 6.0, 120.0, 5040.0];

/// Σ_{k≥1} x^k r(k) for 0 < x ≤ 1, with K chosen so that the remainder is
/// below a quarter of `tol`. Fails if K would exceed `budget`.
pub fn em_sum(x: f64, weight: &RationalWeight, tol: f64, budget: usize) -> Result<Evaluation> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain(format!("Euler–Maclaurin summation needs 0 < x <= 1, got {x}")));
    }
    if x == 1.0 && weight.degree() < 2 {
        return Err(domain("Euler–Maclaurin summation at x = 1 needs r(k) = O(k^-2)"));
    }
    let mut big_k = 16usize;
    let remainder = loop {
        let jet = weight.jet(x, big_k as f64);
        // f^{(9)}(K) = 9!·jet[9]
        let rem = 2.0 * (CORRECTIONS[4] * 362_880.0 * jet[9]).abs();
        if rem <= 0.25 * tol {
            break rem;
        }
        if big_k * 2 > budget {
            return Err(Error::BudgetExceeded { budget, best_bound: rem });
        }
        big_k *= 2;
    };

    let mut head = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..big_k {
        xk *= x;
        head.add(xk * weight.eval(k as f64));
    }

    let kf = big_k as f64;
    let lx = x.ln();
    let deg = weight.degree() as i32;
    let integrand = |u: f64| {
        let decay = if lx == 0.0 { 1.0 } else { (lx * kf / u).exp() };
        if decay == 0.0 {
            return 0.0;
        }
        decay * weight.eval_inverted(kf, u) * kf * u.powi(deg - 2)
    };
    let integral = integrate(integrand, 0.0, 1.0, 0.25 * tol)?;

    let jet = weight.jet(x, kf);
    let mut tail = CompensatedSum::new();
    tail.add(integral.value);
    tail.add(0.5 * jet[0]);
    for (j, c) in CORRECTIONS.iter().take(4).enumerate() {
        let order = 2 * j + 1;
        tail.add(-c * ODD_FACTORIALS[j] * jet[order]);
    }
    let mut total = CompensatedSum::new();
    total.add(head.value());
    total.add(tail.value());
    let err = remainder
        + integral.err_bound
        + head.rounding_bound()
        + tail.rounding_bound()
        + 4.0 * EPS * (head.magnitude() + tail.magnitude())
        + total.rounding_bound();
    Ok(Evaluation::new(total.value(), err, big_k - 1 + integral.terms_used))
}
