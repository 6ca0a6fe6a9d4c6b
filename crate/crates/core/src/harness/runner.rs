//! Runs the registered checks in parallel and collects the outcomes.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::ClosedForms;
use crate::error::{Error, Result};
use crate::specfun::ConstantsTable;

use super::registry::{evaluate, CheckPoint, Identity, Params, Registry, Suite};

/// Default absolute tolerance of a verification run.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Smallest target ever requested from the oracle.
const ORACLE_FLOOR: f64 = 1e-14;

/// Relative slack granted to large values.
const RELATIVE_SLACK: f64 = 1e-12;

/// Outcome of one closed-form versus oracle comparison.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub identity_id: String,
    pub suite: Suite,
    pub params: Params,
    pub closed_value: Option<f64>,
    pub oracle_value: Option<f64>,
    pub abs_diff: Option<f64>,
    /// Sum of the error bounds of both sides.
    pub combined_bound: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip)]
    pub wall_time: Duration,
    pub formula: String,
    /// Error message when either side could not be evaluated.
    pub diagnostic: Option<String>,
}

/// Runs `suite` with the built-in constants.
pub fn run_suite(suite: Suite, tol: f64, jobs: usize) -> Result<Vec<CheckResult>> {
    run_suite_with_constants(suite, tol, jobs, ConstantsTable::standard())
}

/// Runs `suite` with the closed forms reading from `consts`.
///
/// A point passes when both values are finite and
/// |closed − oracle| ≤ max(tolerance, combined error bound), where the
/// tolerance is max(tol·scale, 1e-12·|closed|). Results are sorted by
/// identity and then by parameters, independent of `jobs`.
pub fn run_suite_with_constants(
    suite: Suite,
    tol: f64,
    jobs: usize,
    consts: &ConstantsTable,
) -> Result<Vec<CheckResult>> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(crate::error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let registry = Registry::standard()?;
    let work: Vec<(&Identity, &CheckPoint)> =
        registry.suite(suite).flat_map(|id| id.points.iter().map(move |p| (id, p))).collect();
    let closed_forms = ClosedForms::with_constants(consts);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::ContractViolation(format!("cannot start worker pool: {e}")))?;
    let mut results: Vec<CheckResult> =
        pool.install(|| work.par_iter().map(|(id, p)| check_point(id, p, tol, &closed_forms)).collect());
    results
        .sort_by(|a, b| a.identity_id.cmp(&b.identity_id).then_with(|| a.params.sort_key().cmp(&b.params.sort_key())));
    Ok(results)
}

/// Evaluates both sides of one point and compares them.
pub fn check_point(identity: &Identity, point: &CheckPoint, tol: f64, closed_forms: &ClosedForms<'_>) -> CheckResult {
    let start = Instant::now();
    let scaled = tol * identity.tolerance_scale;
    let oracle_tol = (scaled * 1e-2).max(ORACLE_FLOOR);
    let closed = evaluate(&point.closed, closed_forms, oracle_tol);
    let oracle = evaluate(&point.oracle, closed_forms, oracle_tol);
    let mut result = CheckResult {
        identity_id: identity.id.clone(),
        suite: identity.suite,
        params: point.params,
        closed_value: None,
        oracle_value: None,
        abs_diff: None,
        combined_bound: None,
        tolerance: scaled,
        passed: false,
        wall_time: Duration::ZERO,
        formula: identity.formula.clone(),
        diagnostic: None,
    };
    match (closed, oracle) {
        (Ok(c), Ok(o)) => {
            let tolerance = scaled.max(RELATIVE_SLACK * c.value.abs());
            let diff = (c.value - o.value).abs();
            let bound = c.err_bound + o.err_bound;
            result.closed_value = Some(c.value);
            result.oracle_value = Some(o.value);
            result.abs_diff = Some(diff);
            result.combined_bound = Some(bound);
            result.tolerance = tolerance;
            result.passed = c.value.is_finite() && o.value.is_finite() && diff <= tolerance.max(bound);
            if !result.passed {
                result.diagnostic = Some(format!("difference {diff:e} exceeds tolerance {tolerance:e}"));
            }
        }
        (c, o) => {
            result.closed_value = c.as_ref().ok().map(|e| e.value);
            result.oracle_value = o.as_ref().ok().map(|e| e.value);
            let msgs: Vec<String> = [("closed form", c.err()), ("oracle", o.err())]
                .into_iter()
                .filter_map(|(side, e)| e.map(|e| format!("{side}: {e}")))
                .collect();
            result.diagnostic = Some(msgs.join("; "));
        }
    }
    result.wall_time = start.elapsed();
    result
}

/// Passed and total counts.
pub fn summary(results: &[CheckResult]) -> (usize, usize) {
    (results.iter().filter(|r| r.passed).count(), results.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(results: &'a [CheckResult], id: &str) -> &'a CheckResult {
        results.iter().find(|r| r.identity_id == id).unwrap_or_else(|| panic!("{id} missing"))
    }

    #[test]
    fn examples_pass() {
        let results = run_suite(Suite::Examples, 1e-10, 4).unwrap();
        for r in &results {
            assert!(
                r.passed,
                "{} {}: {:?} vs {:?} ({:?})",
                r.identity_id, r.params, r.closed_value, r.oracle_value, r.diagnostic
            );
        }
        let r = find(&results, "example_p_pos_n1_z_half");
        assert_eq!(r.params.z, Some(0.5));
        assert!(r.abs_diff.unwrap() < 1e-10);
    }

    #[test]
    fn special_values_pass() {
        let results = run_suite(Suite::SpecialValues, 1e-12, 2).unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert!(r.passed, "{}: {:?}", r.identity_id, r.diagnostic);
        }
    }

    #[test]
    fn runs_are_deterministic_across_thread_counts() {
        let a = run_suite(Suite::Bernoulli, DEFAULT_TOLERANCE, 1).unwrap();
        let b = run_suite(Suite::Bernoulli, DEFAULT_TOLERANCE, 4).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.identity_id, y.identity_id);
            assert_eq!(x.params, y.params);
            assert_eq!(x.closed_value.map(f64::to_bits), y.closed_value.map(f64::to_bits));
            assert_eq!(x.oracle_value.map(f64::to_bits), y.oracle_value.map(f64::to_bits));
        }
    }

    #[test]
    fn corrupted_zeta3_is_caught() {
        let mut consts = ConstantsTable::standard().clone();
        *consts.zeta_mut(3).unwrap() += 1e-6;
        let results = run_suite_with_constants(Suite::Examples, DEFAULT_TOLERANCE, 4, &consts).unwrap();
        assert!(!find(&results, "example_p_pos_n3_z1").passed);
        assert!(find(&results, "example_p_pos_n1_z_half").passed);
        let core = run_suite_with_constants(Suite::Core, DEFAULT_TOLERANCE, 4, &consts).unwrap();
        assert!(core.iter().any(|r| r.identity_id == "clausen_kk_plus_n" && !r.passed));
    }

    #[test]
    fn bad_tolerance_is_rejected() {
        assert!(run_suite(Suite::Examples, 0.0, 1).is_err());
        assert!(run_suite(Suite::Examples, f64::NAN, 1).is_err());
    }
}
