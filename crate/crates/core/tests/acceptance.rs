//! Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use zetaseries_core::closedform::{ClosedForms, DerivativeKind, PINNED_BRANCH};
use zetaseries_core::harness::{run_suite, CheckResult, Suite};
use zetaseries_core::oracle::{cvz_accelerate, sum_series, Family, SeriesSpec, SignConvention};
use zetaseries_core::specfun::{clausen, polylog};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn strict_failures(results: &[CheckResult]) -> Vec<String> {
    results
        .iter()
        .filter(|r| !r.passed || r.abs_diff.map_or(true, |d| d > r.tolerance))
        .map(|r| {
            format!("{} {} diff={:?} tol={:e} {:?}", r.identity_id, r.params, r.abs_diff, r.tolerance, r.diagnostic)
        })
        .collect()
}

fn p_at_one() -> Outcome {
    let start = Instant::now();
    let closed = ClosedForms::standard().eval_p(1, 1.0).map_err(|e| e.to_string())?;
    let spec = SeriesSpec::p(1, 1.0, SignConvention::Alternating);
    let oracle = sum_series(&spec, 1e-12).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let rhs = -(1.0 + 5.0 * PI / 12.0 - (2.0 * PI).ln());
    let diff = (closed.value - oracle.value).abs();
    let detail = format!(
        "closed {} oracle {} diff {diff:e}; closed minus elementary part {:e}; {elapsed:?}",
        closed.value,
        oracle.value,
        closed.value - rhs
    );
    if diff <= 1e-10 && elapsed < Duration::from_millis(50) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn examples() -> Outcome {
    let results = run_suite(Suite::Examples, 1e-10, 4).map_err(|e| e.to_string())?;
    let bad = strict_failures(&results);
    let worst = results.iter().filter_map(|r| r.abs_diff).fold(0.0, f64::max);
    if bad.is_empty() {
        Ok(format!("{} constants, largest difference {worst:e}", results.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn grand_grid() -> Outcome {
    let start = Instant::now();
    let results = run_suite(Suite::All, 1e-9, 1).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let grid: Vec<_> = results.iter().filter(|r| !matches!(r.suite, Suite::Examples | Suite::SpecialValues)).collect();
    let failed: Vec<_> =
        results.iter().filter(|r| !r.passed).map(|r| format!("{} {}", r.identity_id, r.params)).collect();
    let by_bound = grid.iter().filter(|r| r.passed && r.abs_diff.is_some_and(|d| d > r.tolerance)).count();
    let detail = format!(
        "{} grid checks, {} total, {} failed, {by_bound} within the combined error bound only; {elapsed:?} single-threaded",
        grid.len(),
        results.len(),
        failed.len()
    );
    if failed.is_empty() && grid.len() >= 300 && elapsed < Duration::from_secs(60) {
        Ok(detail)
    } else {
        Err(format!("{detail}: {}", failed.join("; ")))
    }
}

fn special_values() -> Outcome {
    let results = run_suite(Suite::SpecialValues, 1e-12, 1).map_err(|e| e.to_string())?;
    let bad = strict_failures(&results);
    if bad.is_empty() && results.len() >= 10 {
        Ok(format!("{} values", results.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn bernoulli() -> Outcome {
    let cf = ClosedForms::standard();
    let spec = SeriesSpec::new(Family::BernoulliOdd, 1.0, SignConvention::Positive);
    let oracle = sum_series(&spec, 1e-13).map_err(|e| e.to_string())?.value;
    let closed = cf.eval_spec(&spec).map_err(|e| e.to_string())?.value;
    let rhs = 2.5 - PI * PI / 3.0 + 2.0 * polylog(2, (-1f64).exp()).map_err(|e| e.to_string())?.value;
    let mut worst = (closed - oracle).abs().max((rhs - oracle).abs());
    let mut lines = vec![format!("odd series at 1: {oracle} vs {rhs}")];
    for z in [0.5, 1.0, 3.0] {
        let spec = SeriesSpec::new(Family::BernoulliGenerating, z, SignConvention::Positive);
        let termwise = sum_series(&spec, 1e-13).map_err(|e| e.to_string())?.value;
        let closed = cf.eval_spec(&spec).map_err(|e| e.to_string())?.value;
        worst = worst.max((closed - termwise).abs());
        lines.push(format!("generating function at {z}: {closed} vs {termwise}"));
    }
    let detail = format!("{}; largest difference {worst:e}", lines.join(", "));
    if worst <= 1e-11 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn properties() -> Outcome {
    let mut problems = Vec::new();
    let thetas: Vec<f64> = (1..40).map(|i| -6.0 + 0.31 * i as f64).collect();
    for &t in &thetas {
        for n in 2..=5u32 {
            let a = clausen(n, t).map_err(|e| e.to_string())?.value;
            let neg = clausen(n, -t).map_err(|e| e.to_string())?.value;
            let shifted = clausen(n, t + 2.0 * PI).map_err(|e| e.to_string())?.value;
            let parity = if n % 2 == 0 { -1.0 } else { 1.0 };
            if (neg - parity * a).abs() > 1e-12 || (shifted - a).abs() > 1e-12 {
                problems.push(format!("Cl{n} parity/periodicity at {t}"));
            }
        }
        let h = 1e-5;
        let fd = (clausen(3, t + h).unwrap().value - clausen(3, t - h).unwrap().value) / (2.0 * h);
        if (fd + clausen(2, t).unwrap().value).abs() > 1e-6 {
            problems.push(format!("Cl3' = -Cl2 at {t}"));
        }
    }
    for s in 2..=6u32 {
        let vals: Vec<f64> = (0..50).map(|i| polylog(s, i as f64 / 50.0).unwrap().value).collect();
        if vals.windows(2).any(|w| w[1] <= w[0]) {
            problems.push(format!("Li{s} not increasing"));
        }
    }
    for x in [0.3f64, 0.6, 0.9] {
        let cvz = cvz_accelerate(|k| (-x).powi(k as i32) / (k as f64 + 1.0), 60).map_err(|e| e.to_string())?.value;
        let brute: f64 = (0..2000).map(|k| (-x).powi(k) / (k as f64 + 1.0)).sum();
        if (cvz - brute).abs() > 1e-12 {
            problems.push(format!("CVZ vs brute force at x={x}: {cvz} vs {brute}"));
        }
    }
    let alt = SignConvention::Alternating;
    let mut points = 0;
    for &(n, z) in
        &[(1, 0.1), (1, 0.5), (1, 1.0), (2, 0.25), (2, 0.95), (3, 0.5), (3, 1.0), (4, 0.618), (5, 0.75), (6, 1.0)]
    {
        let p = sum_series(&SeriesSpec::p(n, z, alt), 1e-14).map_err(|e| e.to_string())?.value;
        let s1 = sum_series(&SeriesSpec::new(Family::S1, z, alt), 1e-14).map_err(|e| e.to_string())?.value;
        let s2 = sum_series(&SeriesSpec::new(Family::S2, z, alt).with_n(n), 1e-14).map_err(|e| e.to_string())?.value;
        if (n as f64 * p - (s1 - 2.0 * s2)).abs() > 1e-11 {
            problems.push(format!("nP = S1 - 2S2 at n={n} z={z}"));
        }
        points += 1;
    }
    if problems.is_empty() {
        Ok(format!(
            "Clausen parity/periodicity and Cl3' on {} angles, Li_s monotone for s=2..6, CVZ on 3 series, partial fractions on {points} points",
            thetas.len()
        ))
    } else {
        Err(problems.join("; "))
    }
}

fn branch_residual() -> Outcome {
    let cf = ClosedForms::standard();
    let mut worst: f64 = 0.0;
    for z in [0.3, 0.5, 0.9] {
        for kind in [DerivativeKind::AlternatingHalfInt, DerivativeKind::AlternatingHalfIntKPlusOne] {
            let v = cf.eval_deriv_family(z, kind).map_err(|e| e.to_string())?;
            if v.branch != Some(PINNED_BRANCH) {
                return Err(format!("{kind:?} at {z} used {:?}", v.branch));
            }
            worst = worst.max(v.residual_im);
        }
    }
    let detail = format!("largest |Im| {worst:e} on the {PINNED_BRANCH:?} side");
    if worst <= 1e-10 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn general_powers() -> Outcome {
    let cf = ClosedForms::standard();
    let alt = SignConvention::Alternating;
    let mut specs = Vec::new();
    for p in [2, 3] {
        specs.push(SeriesSpec::new(Family::Ppow, 0.5, alt).with_n(1).with_p(p));
        specs.push(SeriesSpec::new(Family::Ppow, 1.0, alt).with_n(3).with_p(p));
        specs.push(SeriesSpec::new(Family::Ppow, 0.25, alt).with_n(2).with_p(p));
        specs.push(SeriesSpec::new(Family::Ppow, 0.618, alt).with_n(5).with_p(p));
        specs.push(SeriesSpec::new(Family::Pmnpow, 0.5, alt).with_m(1).with_n(2).with_p(p));
        specs.push(SeriesSpec::new(Family::Pmnpow, 1.0, alt).with_m(2).with_n(5).with_p(p));
        specs.push(SeriesSpec::new(Family::Pmnpow, 0.95, alt).with_m(1).with_n(3).with_p(p));
        specs.push(SeriesSpec::new(Family::Qpow, 0.5, alt).with_m(1).with_p(p));
        specs.push(SeriesSpec::new(Family::Qpow, 1.0, alt).with_m(3).with_p(p));
        specs.push(SeriesSpec::new(Family::Qpow, 0.25, alt).with_m(2).with_p(p));
    }
    let mut worst: f64 = 0.0;
    for spec in &specs {
        let closed = cf.eval_spec(spec).map_err(|e| format!("{spec}: {e}"))?.value;
        let oracle = sum_series(spec, 1e-12).map_err(|e| format!("{spec}: {e}"))?.value;
        let d = (closed - oracle).abs();
        if d > 1e-9 {
            return Err(format!("{spec}: {closed} vs {oracle}"));
        }
        worst = worst.max(d);
    }
    Ok(format!("{} tuples, largest difference {worst:e}", specs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 P(1, 1) closed form vs oracle, under 50 ms", p_at_one),
        ("2 example constants", examples),
        ("3 grand grid at 1e-9", grand_grid),
        ("4 special values at 1e-12", special_values),
        ("5 Bernoulli series", bernoulli),
        ("6 property suites", properties),
        ("7 branch residual", branch_residual),
        ("8 extra powers p = 2, 3", general_powers),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
