//! Brute-force summation of Σ σ_k ζ(2k) x^k r(k) and the families built on it.

use std::f64::consts::TAU;

use crate::acceleration::{cvz_accelerate, cvz_count_for};
use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::sequences::{bernoulli_ratio, fib_lucas_weighted, BernoulliScale, BINET};
use crate::specfun::{zeta_even_minus_one, zeta_int};
use crate::summation::CompensatedSum;

use super::dilog::dilog_sum;
use super::euler_maclaurin::em_sum;
use super::spec::{Family, SeriesSpec, SignConvention};
use super::weight::RationalWeight;

/// Below this value of x = z² terms are summed directly; at or above it the
/// series is Kummer split. Corresponds to |z| = 0.95.
pub const KUMMER_THRESHOLD: f64 = 0.9025;

/// Below this |u/2π| the Bernoulli families are summed term by term from
/// B_{2k}/(2k)!; above it they are mapped onto zeta series.
pub const BERNOULLI_DIRECT_BELOW: f64 = 0.5;

/// Term budgets for one series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummationBudget {
    /// Maximum number of k-terms.
    pub terms: usize,
    /// Maximum number of t-terms for [`Family::DilogSum`].
    pub dilog_terms: usize,
}

impl Default for SummationBudget {
    fn default() -> Self {
        Self { terms: 1_000_000, dilog_terms: 100_000 }
    }
}

/// Sums the series named by `spec` to absolute error `target_tol`.
///
/// # Example
/// ```
/// use zetaseries_core::oracle::{sum_series, Family, SeriesSpec, SignConvention};
/// // Σ (−1)^k ζ(2k) z^{2k}/k = −ln(sinh(πz)/(πz))
/// let spec = SeriesSpec::new(Family::S1, 0.5, SignConvention::Alternating);
/// let v = sum_series(&spec, 1e-13).unwrap();
/// let h = std::f64::consts::FRAC_PI_2;
/// assert!((v.value + (h.sinh() / h).ln()).abs() < 1e-13);
/// ```
pub fn sum_series(spec: &SeriesSpec, target_tol: f64) -> Result<Evaluation> {
    sum_series_with_budget(spec, target_tol, SummationBudget::default())
}

/// [`sum_series`] with explicit term budgets.
pub fn sum_series_with_budget(spec: &SeriesSpec, target_tol: f64, budget: SummationBudget) -> Result<Evaluation> {
    spec.validate()?;
    if target_tol.is_nan() || target_tol <= 0.0 || !target_tol.is_finite() {
        return Err(domain(format!("target tolerance must be positive, got {target_tol}")));
    }
    match spec.family {
        Family::DilogSum => dilog_sum(spec.need_p()?, spec.z, target_tol, budget.dilog_terms),
        f if f.is_bernoulli() => bernoulli_series(f, spec.z, target_tol, budget.terms),
        f if f.is_fibonacci() => fibonacci_series(spec, target_tol, budget.terms),
        _ => {
            let weight = weight_for(spec)?;
            zeta_rational_sum(spec.sign, spec.z * spec.z, &weight, target_tol, budget.terms)
        }
    }
}

/// The rational weight r(k) of a standard or Fibonacci family.
pub fn weight_for(spec: &SeriesSpec) -> Result<RationalWeight> {
    let two = 2.0;
    let w = match spec.family {
        Family::P | Family::FibP | Family::LucP => RationalWeight::k_pow(1).times(two, spec.need_n()? as f64, 1),
        Family::Pmn => {
            RationalWeight::k_pow(1).times(two, spec.need_m()? as f64, 1).times(two, spec.need_n()? as f64, 1)
        }
        Family::Q => RationalWeight::k_pow(1).times(two, spec.need_m()? as f64, 2),
        Family::S1 => RationalWeight::k_pow(1),
        Family::S2 => RationalWeight::one().times(two, spec.need_n()? as f64, 1),
        Family::S3 => RationalWeight::one().times(two, spec.need_m()? as f64, 2),
        Family::Ppow => RationalWeight::k_pow(spec.need_p()?).times(two, spec.need_n()? as f64, 1),
        Family::Pmnpow => RationalWeight::k_pow(spec.need_p()?).times(two, spec.need_m()? as f64, 1).times(
            two,
            spec.need_n()? as f64,
            1,
        ),
        Family::Qpow => RationalWeight::k_pow(spec.need_p()?).times(two, spec.need_m()? as f64, 2),
        Family::KKPlusN | Family::FibKKPlusN | Family::LucKKPlusN => {
            RationalWeight::k_pow(1).times(1.0, spec.need_n()? as f64, 1)
        }
        Family::HalfInt => RationalWeight::one().times(two, 1.0, 1),
        Family::HalfIntKPlusOne => RationalWeight::one().times(two, 1.0, 1).times(1.0, 1.0, 1),
        Family::DilogSum => RationalWeight::k_pow(spec.need_p()?),
        f => return Err(domain(format!("{f} is not a rational-weight zeta series"))),
    };
    Ok(w)
}

/// Σ_{k≥1} σ_k ζ(2k) x^k r(k) for 0 < x ≤ 1.
///
/// For x below [`KUMMER_THRESHOLD`] the terms are added until the bound
/// ζ(2)·r(K+1)·x^{K+1}/(1−x) on the tail drops below `tol`. Otherwise
/// ζ(2k) = 1 + (ζ(2k) − 1): the second part decays like 4^{−k} and is summed
/// directly, the first is CVZ accelerated (alternating) or Euler–Maclaurin
/// summed (positive).
pub fn zeta_rational_sum(
    sign: SignConvention,
    x: f64,
    weight: &RationalWeight,
    tol: f64,
    budget: usize,
) -> Result<Evaluation> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain(format!("zeta series needs 0 < z² <= 1, got z² = {x}")));
    }
    if x < KUMMER_THRESHOLD {
        return direct_sum(sign, x, weight, tol, budget);
    }
    let fast = zeta_minus_one_part(sign, x, weight, 0.5 * tol, budget)?;
    let slow = match sign {
        SignConvention::Alternating => alternating_unit_part(x, weight, 0.5 * tol)?,
        SignConvention::Positive => em_sum(x, weight, 0.5 * tol, budget)?,
    };
    Ok((fast + slow).with_terms(fast.terms_used + slow.terms_used))
}

fn direct_sum(sign: SignConvention, x: f64, weight: &RationalWeight, tol: f64, budget: usize) -> Result<Evaluation> {
    let zeta2 = zeta_int(2)?.value;
    let tail = |k: usize| zeta2 * weight.eval((k + 1) as f64).abs() * x.powi(k as i32 + 1) / (1.0 - x);
    let mut acc = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..=budget {
        xk *= x;
        let zeta = 1.0 + zeta_even_minus_one(k);
        acc.add(sign.sigma(k) * zeta * xk * weight.eval(k as f64));
        let t = tail(k);
        if t <= 0.5 * tol {
            let err = t + acc.rounding_bound() + 4.0 * EPS * acc.magnitude();
            return Ok(Evaluation::new(acc.value(), err, k));
        }
    }
    Err(Error::BudgetExceeded { budget, best_bound: tail(budget) })
}

/// Σ σ_k (ζ(2k) − 1) x^k r(k), using ζ(2k) − 1 ≤ 4^{−k}(1 + 2/(2k−1)).
fn zeta_minus_one_part(
    sign: SignConvention,
    x: f64,
    weight: &RationalWeight,
    tol: f64,
    budget: usize,
) -> Result<Evaluation> {
    let tail = |k: usize| {
        let kf = k as f64;
        weight.eval(kf + 1.0).abs() * 0.25f64.powi(k as i32) / 3.0
            * (1.0 + 2.0 / (2.0 * kf + 1.0))
            * x.powi(k as i32 + 1)
    };
    let mut acc = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..=budget {
        xk *= x;
        acc.add(sign.sigma(k) * zeta_even_minus_one(k) * xk * weight.eval(k as f64));
        let t = tail(k);
        if t <= 0.5 * tol {
            let err = t + acc.rounding_bound() + 8.0 * EPS * acc.magnitude();
            return Ok(Evaluation::new(acc.value(), err, k));
        }
    }
    Err(Error::BudgetExceeded { budget, best_bound: tail(budget) })
}

/// Σ_{k≥1} (−1)^k x^k r(k) by CVZ; x^k r(k) is a moment sequence, so the
/// acceleration bound applies.
fn alternating_unit_part(x: f64, weight: &RationalWeight, tol: f64) -> Result<Evaluation> {
    let a0 = x * weight.eval(1.0);
    let count = cvz_count_for(0.5 * tol / a0.abs().max(f64::MIN_POSITIVE));
    cvz_accelerate(
        |j| {
            let k = j + 1;
            let t = x.powi(k as i32) * weight.eval(k as f64);
            if k % 2 == 1 {
                -t
            } else {
                t
            }
        },
        count,
    )
}

/// Partial sum of the first `terms` terms of a standard family, with a
/// bound on the omitted tail.
///
/// The bound is the geometric one for |z| < 1 and, at |z| = 1, the first
/// omitted term for alternating series. Positive series at |z| = 1 have
/// no finite-term bound and are refused.
pub fn partial_sum(spec: &SeriesSpec, terms: usize) -> Result<Evaluation> {
    spec.validate()?;
    if spec.family.is_bernoulli() || spec.family.is_fibonacci() || spec.family == Family::DilogSum {
        return Err(domain(format!("partial sums are provided for the plain zeta families, not {}", spec.family)));
    }
    let weight = weight_for(spec)?;
    let x = spec.z * spec.z;
    let mut acc = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..=terms {
        xk *= x;
        acc.add(spec.sign.sigma(k) * (1.0 + zeta_even_minus_one(k)) * xk * weight.eval(k as f64));
    }
    let next = (terms + 1) as f64;
    let tail = if x < 1.0 {
        zeta_int(2)?.value * weight.eval(next).abs() * x.powf(next) / (1.0 - x)
    } else if spec.sign == SignConvention::Alternating {
        (1.0 + zeta_even_minus_one(terms + 1)) * weight.eval(next).abs()
    } else {
        return Err(domain("a positive series at |z| = 1 has no finite partial-sum bound"));
    };
    Ok(Evaluation::new(acc.value(), tail + acc.rounding_bound() + 4.0 * EPS * acc.magnitude(), terms))
}

fn fibonacci_series(spec: &SeriesSpec, tol: f64, budget: usize) -> Result<Evaluation> {
    let weight = weight_for(spec)?;
    let lucas = matches!(spec.family, Family::LucP | Family::LucKKPlusN);
    let z = spec.z;
    let mut y_alpha = (BINET.alpha * z).powi(2);
    if y_alpha > 1.0 {
        // Only reachable through rounding at z = ±1/α, admitted by validate().
        y_alpha = 1.0;
    }
    if y_alpha < KUMMER_THRESHOLD {
        return fibonacci_direct(spec, &weight, lucas, y_alpha, tol, budget);
    }
    // F_{2k} z^{2k} = ((αz)^{2k} − (βz)^{2k})/√5, L_{2k} z^{2k} = (αz)^{2k} + (βz)^{2k}
    let y_beta = (BINET.beta * z).powi(2);
    let a = zeta_rational_sum(spec.sign, y_alpha, &weight, 0.25 * tol, budget)?;
    let b = zeta_rational_sum(spec.sign, y_beta, &weight, 0.25 * tol, budget)?;
    let v = if lucas { a + b } else { (a - b) / BINET.sqrt5 };
    Ok(v.with_terms(a.terms_used + b.terms_used))
}

fn fibonacci_direct(
    spec: &SeriesSpec,
    weight: &RationalWeight,
    lucas: bool,
    y: f64,
    tol: f64,
    budget: usize,
) -> Result<Evaluation> {
    let zeta2 = zeta_int(2)?.value;
    let coef = if lucas { 2.0 } else { 2.0 / BINET.sqrt5 };
    let tail = |k: usize| coef * zeta2 * weight.eval((k + 1) as f64).abs() * y.powi(k as i32 + 1) / (1.0 - y);
    let mut acc = CompensatedSum::new();
    for k in 1..=budget {
        let (f, l) = fib_lucas_weighted(k, spec.z)?;
        let w = if lucas { l } else { f };
        acc.add(spec.sign.sigma(k) * (1.0 + zeta_even_minus_one(k)) * w * weight.eval(k as f64));
        let t = tail(k);
        if t <= 0.5 * tol {
            // Each Binet weight carries a relative error of about 4k ulp from powi.
            let err = t + acc.rounding_bound() + (4.0 * k as f64 + 8.0) * EPS * acc.magnitude();
            return Ok(Evaluation::new(acc.value(), err, k));
        }
    }
    Err(Error::BudgetExceeded { budget, best_bound: tail(budget) })
}

fn bernoulli_series(family: Family, z: f64, tol: f64, budget: usize) -> Result<Evaluation> {
    let u = if family == Family::BernoulliLog { z.ln() } else { z };
    let w = u / TAU;
    if w.abs() < BERNOULLI_DIRECT_BELOW {
        return bernoulli_direct(family, u, tol, budget);
    }
    // B_{2k} u^{2k}/(2k)! = −2(−1)^k ζ(2k) (u/2π)^{2k}
    let x = (w * w).min(1.0);
    let alt = SignConvention::Alternating;
    Ok(match family {
        Family::BernoulliLog | Family::BernoulliOdd => {
            let r = RationalWeight::k_pow(1).times(2.0, 1.0, 1);
            zeta_rational_sum(alt, x, &r, 0.5 * tol / u.abs(), budget)? * (-2.0 * u)
        }
        Family::BernoulliEven => zeta_rational_sum(alt, x, &RationalWeight::k_pow(1), 0.5 * tol, budget)? * -2.0,
        Family::BernoulliGenerating => {
            let s = zeta_rational_sum(alt, x, &RationalWeight::one(), 0.5 * tol, budget)?;
            (s * -2.0 + 1.0).with_terms(s.terms_used)
        }
        f => unreachable!("{f} is not a Bernoulli family"),
    })
}

/// Term-by-term summation from B_{2k}/(2k)!, with the tail bounded through
/// |B_{2k}|/(2k)! ≤ 2ζ(2)/(2π)^{2k}.
fn bernoulli_direct(family: Family, u: f64, tol: f64, budget: usize) -> Result<Evaluation> {
    let x = (u / TAU).powi(2);
    let rho = |k: f64| match family {
        Family::BernoulliLog | Family::BernoulliOdd => u / (k * (2.0 * k + 1.0)),
        Family::BernoulliEven => 1.0 / k,
        _ => 1.0,
    };
    let zeta2 = zeta_int(2)?.value;
    let tail = |k: usize| 2.0 * zeta2 * rho((k + 1) as f64).abs() * x.powi(k as i32 + 1) / (1.0 - x);
    let mut acc = CompensatedSum::new();
    if family == Family::BernoulliGenerating {
        acc.add(1.0);
    }
    let u2 = u * u;
    let mut upow = 1.0;
    for k in 1..=budget {
        upow *= u2;
        let b = bernoulli_ratio(k, BernoulliScale::OverFactorial)?;
        acc.add(b * upow * rho(k as f64));
        let t = tail(k);
        if t <= 0.5 * tol {
            let err = t + acc.rounding_bound() + 16.0 * EPS * acc.magnitude();
            return Ok(Evaluation::new(acc.value(), err, k));
        }
    }
    Err(Error::BudgetExceeded { budget, best_bound: tail(budget) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ALT: SignConvention = SignConvention::Alternating;
    const POS: SignConvention = SignConvention::Positive;

    #[test]
    fn s1_matches_log_sinh() {
        for &z in &[0.3, 0.5, 0.96, 1.0] {
            let v = sum_series(&SeriesSpec::new(Family::S1, z, ALT), 1e-13).unwrap();
            let expect = -((PI * z).sinh() / (PI * z)).ln();
            assert!((v.value - expect).abs() <= 1e-13, "z={z}: {} vs {expect}", v.value);
        }
    }

    #[test]
    fn positive_unit_series_telescopes() {
        // Σ ζ(2k)/(k(k+1)) = ln 2π − 1/2
        let spec = SeriesSpec::new(Family::KKPlusN, 1.0, POS).with_n(1);
        let v = sum_series(&spec, 1e-13).unwrap();
        assert!((v.value - ((2.0 * PI).ln() - 0.5)).abs() <= 1e-13, "{v:?}");
    }

    #[test]
    fn kummer_and_direct_agree_near_threshold() {
        let w = RationalWeight::k_pow(1).times(2.0, 3.0, 1);
        for sign in [ALT, POS] {
            let x = KUMMER_THRESHOLD * (1.0 - 1e-9);
            let a = zeta_rational_sum(sign, x, &w, 1e-14, 1_000_000).unwrap();
            let fast = zeta_minus_one_part(sign, KUMMER_THRESHOLD, &w, 1e-14, 1_000_000).unwrap();
            let slow = match sign {
                ALT => alternating_unit_part(KUMMER_THRESHOLD, &w, 1e-14).unwrap(),
                POS => em_sum(KUMMER_THRESHOLD, &w, 1e-14, 1_000_000).unwrap(),
            };
            assert!((a.value - (fast.value + slow.value)).abs() < 1e-9, "{sign:?}");
        }
    }

    #[test]
    fn generating_function_direct_and_mapped_agree() {
        // z/2 + z/(e^z − 1) at z = 3.5, just above the direct-summation switch
        let z: f64 = 3.5;
        let v = sum_series(&SeriesSpec::new(Family::BernoulliGenerating, z, ALT), 1e-13).unwrap();
        let expect = z / 2.0 + z / z.exp_m1();
        assert!((v.value - expect).abs() < 1e-13);
        let v = sum_series(&SeriesSpec::new(Family::BernoulliGenerating, 1.0, ALT), 1e-13).unwrap();
        assert!((v.value - (0.5 + 1.0 / 1f64.exp_m1())).abs() < 1e-13);
    }

    #[test]
    fn fibonacci_direct_and_split_agree() {
        let spec = SeriesSpec::new(Family::FibP, 0.58, ALT).with_n(2);
        let direct = sum_series(&spec, 1e-13).unwrap();
        let w = weight_for(&spec).unwrap();
        let ya = (BINET.alpha * 0.58f64).powi(2);
        let yb = (BINET.beta * 0.58f64).powi(2);
        let a = zeta_rational_sum(ALT, ya, &w, 1e-14, 1_000_000).unwrap();
        let b = zeta_rational_sum(ALT, yb, &w, 1e-14, 1_000_000).unwrap();
        assert!((direct.value - (a.value - b.value) / BINET.sqrt5).abs() < 1e-13);
    }

    #[test]
    fn budget_exceeded_reports_bound() {
        let spec = SeriesSpec::p(1, 0.9, ALT);
        let small = SummationBudget { terms: 5, dilog_terms: 5 };
        match sum_series_with_budget(&spec, 1e-12, small) {
            Err(Error::BudgetExceeded { budget, best_bound }) => {
                assert_eq!(budget, 5);
                assert!(best_bound > 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn partial_sum_leading_term() {
        let z = 0.05;
        let one = partial_sum(&SeriesSpec::p(1, z, ALT), 1).unwrap();
        let zeta2 = PI * PI / 6.0;
        assert!((one.value + zeta2 * z * z / 3.0).abs() < 1e-18);
        assert!(partial_sum(&SeriesSpec::p(1, 1.0, POS), 10).is_err());
    }
}
