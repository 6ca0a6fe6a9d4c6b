//! Polylogarithms of real argument, including the continuation across the
//! branch cut x > 1 for orders 2 and 3.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::acceleration::{cvz_accelerate, cvz_count_for};
use crate::error::{domain, Error, Result};
use crate::evaluation::{ComplexEvaluation, Evaluation, EPS};
use crate::specfun::zeta::zeta_int;
use crate::summation::CompensatedSum;

const DIRECT_BUDGET: usize = 10_000_000;

/// Li_s(x) = Σ_{k≥1} x^k/k^s for −1 ≤ x < 1, and Li_s(1) = ζ(s) for s ≥ 2.
///
/// Li_1 is −ln(1−x). For x < −1/2 the alternating series is CVZ
/// accelerated; otherwise the series is summed until the tail bound
/// |x|^{K+1}/((1−|x|)(K+1)^s) is below half an ulp of the partial sum.
///
/// # Example
/// ```
/// use zetaseries_core::specfun::polylog;
/// let v = polylog(2, -1.0).unwrap();
/// assert!((v.value + std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-15);
/// ```
pub fn polylog(s: u32, x: f64) -> Result<Evaluation> {
    if s == 0 {
        return Err(domain("polylog order must be at least 1"));
    }
    if x.is_nan() {
        return Err(domain("polylog argument is NaN"));
    }
    if x == 1.0 && s >= 2 {
        return zeta_int(s);
    }
    if x >= 1.0 {
        return Err(domain(format!("Li_{s}({x}) lies on or beyond the branch point; use polylog_cut for x > 1")));
    }
    if x < -1.0 {
        return Err(domain(format!("polylog argument {x} is below -1")));
    }
    if x == 0.0 {
        return Ok(Evaluation::exact(0.0));
    }
    if s == 1 {
        let v = -(-x).ln_1p();
        return Ok(Evaluation::new(v, 2.0 * EPS * v.abs(), 1));
    }
    if x < -0.5 {
        return alternating(s, -x);
    }
    if x > REFLECT_ABOVE && (s == 2 || s == 3) {
        return reflected(s, x);
    }
    direct(s, x)
}

/// Above this argument Li₂ and Li₃ switch to reflection formulas.
const REFLECT_ABOVE: f64 = 0.75;

/// Li₂(x) = π²/6 − ln x ln(1−x) − Li₂(1−x) and
/// Li₃(x) = ζ(3) + ln³x/6 + π² ln x/6 − ln²x ln(1−x)/2 − Li₃(1−x) − Li₃(1−1/x),
/// which move the argument away from the slowly converging end.
fn reflected(s: u32, x: f64) -> Result<Evaluation> {
    let lx = x.ln();
    let l1x = (-x).ln_1p();
    let y = 1.0 - x;
    if s == 2 {
        let rest = direct(2, y)?;
        let base = PI * PI / 6.0 - lx * l1x;
        let value = base - rest.value;
        let err = rest.err_bound + 4.0 * EPS * (PI * PI / 6.0 + (lx * l1x).abs());
        return Ok(Evaluation::new(value, err, rest.terms_used));
    }
    let zeta3 = zeta_int(3)?;
    let a = direct(3, y)?;
    let b = polylog(3, 1.0 - 1.0 / x)?;
    let base = lx * lx * lx / 6.0 + PI * PI * lx / 6.0 - 0.5 * lx * lx * l1x;
    let value = zeta3.value + base - a.value - b.value;
    let err = zeta3.err_bound + a.err_bound + b.err_bound + 8.0 * EPS * (zeta3.value + base.abs() + 1.0);
    Ok(Evaluation::new(value, err, a.terms_used + b.terms_used))
}

/// Partial sum of the first `terms` terms with its tail bound.
///
/// Exposed so callers can check that bounds tighten as terms are added.
pub fn polylog_partial(s: u32, x: f64, terms: usize) -> Result<Evaluation> {
    if s == 0 || x.abs() >= 1.0 {
        return Err(domain("polylog_partial needs s >= 1 and |x| < 1"));
    }
    let sf = s as f64;
    let mut acc = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..=terms {
        xk *= x;
        acc.add(xk / (k as f64).powf(sf));
    }
    let tail = tail_bound(x.abs(), sf, terms);
    Ok(Evaluation::new(acc.value(), tail + acc.rounding_bound(), terms))
}

fn tail_bound(ax: f64, s: f64, k: usize) -> f64 {
    let next = (k + 1) as f64;
    ax.powf(next) / ((1.0 - ax) * next.powf(s))
}

fn direct(s: u32, x: f64) -> Result<Evaluation> {
    let sf = s as f64;
    let ax = x.abs();
    let mut acc = CompensatedSum::new();
    let mut xk = 1.0;
    for k in 1..=DIRECT_BUDGET {
        xk *= x;
        acc.add(xk / (k as f64).powf(sf));
        let tail = tail_bound(ax, sf, k);
        if tail <= 0.5 * EPS * acc.value().abs() || tail < 1e-300 {
            return Ok(Evaluation::new(acc.value(), tail + acc.rounding_bound(), k));
        }
    }
    Err(Error::BudgetExceeded { budget: DIRECT_BUDGET, best_bound: tail_bound(ax, sf, DIRECT_BUDGET) })
}

/// −Σ_{k≥0} (−1)^k u^{k+1}/(k+1)^s, i.e. Li_s(−u) for 1/2 < u ≤ 1.
fn alternating(s: u32, u: f64) -> Result<Evaluation> {
    let sf = s as f64;
    let sum = cvz_accelerate(
        |k| {
            let kp = (k + 1) as f64;
            let t = u.powf(kp) / kp.powf(sf);
            if k % 2 == 0 {
                -t
            } else {
                t
            }
        },
        cvz_count_for(1e-18),
    )?;
    Ok(sum)
}

/// Side of the cut x > 1 from which Li_s is approached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum CutBranch {
    /// Limit from Im x > 0; imaginary part +π ln^{s−1}x/(s−1)!.
    Upper,
    /// Limit from Im x < 0; the complex conjugate of the upper value.
    Lower,
}

/// Li_s(x) for x > 1 and s ∈ {2, 3}, as a limit from the chosen half-plane.
///
/// The real part uses the inversion relations
/// Re Li₂(x) = π²/3 − ln²x/2 − Li₂(1/x) and
/// Re Li₃(x) = Li₃(1/x) − ln³x/6 + π² ln x/3.
pub fn polylog_cut(s: u32, x: f64, branch: CutBranch) -> Result<ComplexEvaluation> {
    if x.is_nan() || x <= 1.0 {
        return Err(domain(format!("polylog_cut needs x > 1, got {x}")));
    }
    let l = x.ln();
    let inv = polylog(s, 1.0 / x)?;
    let (re, im) = match s {
        2 => {
            let base = PI * PI / 3.0 - 0.5 * l * l;
            (Evaluation::rounded(base) - inv, PI * l)
        }
        3 => {
            let base = -l * l * l / 6.0 + PI * PI * l / 3.0;
            (inv + Evaluation::rounded(base), 0.5 * PI * l * l)
        }
        _ => return Err(domain(format!("polylog_cut supports orders 2 and 3, got {s}"))),
    };
    let im = match branch {
        CutBranch::Upper => im,
        CutBranch::Lower => -im,
    };
    let err = re.err_bound + 4.0 * EPS * (im.abs() + l * l * l + 1.0);
    Ok(ComplexEvaluation::new(Complex64::new(re.value, im), err, re.terms_used))
}
