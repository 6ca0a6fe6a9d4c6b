//! JSON, CSV and Markdown renderings of a verification run.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};

use super::registry::Suite;
use super::runner::{summary, CheckResult};

/// Output format of [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(domain(format!("unknown report format `{other}`; expected json, csv or markdown"))),
        }
    }
}

/// Formats a float so that parsing it back gives the same bits: plain
/// decimal for moderate magnitudes, scientific notation otherwise.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else if v.is_finite() {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

/// One report row; the same keys are used by every format.
#[derive(Debug, Serialize)]
struct Row<'a> {
    identity_id: &'a str,
    params: String,
    closed_value: Option<f64>,
    oracle_value: Option<f64>,
    abs_diff: Option<f64>,
    tolerance: f64,
    passed: bool,
    formula: &'a str,
}

impl<'a> From<&'a CheckResult> for Row<'a> {
    fn from(r: &'a CheckResult) -> Self {
        Row {
            identity_id: &r.identity_id,
            params: r.params.to_string(),
            closed_value: r.closed_value,
            oracle_value: r.oracle_value,
            abs_diff: r.abs_diff,
            tolerance: r.tolerance,
            passed: r.passed,
            formula: &r.formula,
        }
    }
}

/// Writes `results` to `out` in the requested format. An empty result list
/// is rejected.
pub fn emit_report(results: &[CheckResult], format: ReportFormat, out: &mut dyn Write) -> Result<()> {
    if results.is_empty() {
        return Err(Error::Report("nothing to report".into()));
    }
    match format {
        ReportFormat::Json => write_json(results, out),
        ReportFormat::Csv => write_csv(results, out),
        ReportFormat::Markdown => Ok(out.write_all(markdown(results).as_bytes())?),
    }
}

fn write_json(results: &[CheckResult], out: &mut dyn Write) -> Result<()> {
    let rows: Vec<Row<'_>> = results.iter().map(Row::from).collect();
    serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| Error::Report(e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}

fn write_csv(results: &[CheckResult], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "identity_id",
        "params",
        "closed_value",
        "oracle_value",
        "abs_diff",
        "tolerance",
        "passed",
        "formula",
    ])
    .map_err(|e| Error::Report(e.to_string()))?;
    for r in results {
        w.write_record([
            r.identity_id.clone(),
            r.params.to_string(),
            opt(r.closed_value),
            opt(r.oracle_value),
            opt(r.abs_diff),
            format_float(r.tolerance),
            r.passed.to_string(),
            r.formula.clone(),
        ])
        .map_err(|e| Error::Report(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn markdown(results: &[CheckResult]) -> String {
    let mut s = String::new();
    let (passed, total) = summary(results);
    let _ = writeln!(s, "# Verification report\n\n{passed} passed / {total} total");
    for suite in Suite::ALL {
        let rows: Vec<_> = results.iter().filter(|r| r.suite == suite).collect();
        if rows.is_empty() {
            continue;
        }
        let _ = writeln!(s, "\n## {suite}\n");
        let _ = writeln!(s, "| identity | params | closed | oracle | abs diff | tolerance | result |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for r in rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                r.identity_id,
                r.params,
                opt(r.closed_value),
                opt(r.oracle_value),
                opt(r.abs_diff),
                format_float(r.tolerance),
                if r.passed { "PASS" } else { "FAIL" },
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::registry::Params;
    use std::time::Duration;

    fn result(id: &str, closed: f64, oracle: f64) -> CheckResult {
        CheckResult {
            identity_id: id.into(),
            suite: Suite::Examples,
            params: Params { n: Some(1), z: Some(0.5), ..Default::default() },
            closed_value: Some(closed),
            oracle_value: Some(oracle),
            abs_diff: Some((closed - oracle).abs()),
            combined_bound: Some(0.0),
            tolerance: 1e-10,
            passed: true,
            wall_time: Duration::ZERO,
            formula: "ln(pi) - 1".into(),
            diagnostic: None,
        }
    }

    #[test]
    fn floats_round_trip() {
        for v in [0.0, 1.0, -0.1447298858494002, 1e-20, 3.5e17, 1.2345678901234567e-6, f64::MIN_POSITIVE] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_float(1e-10), "1e-10");
        assert_eq!(format_float(0.5), "0.5");
    }

    #[test]
    fn csv_has_header_and_rows() {
        let v = std::f64::consts::PI.ln() - 1.0;
        let mut buf = Vec::new();
        emit_report(&[result("example_p_pos_n1_z_half", v, v)], ReportFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "identity_id,params,closed_value,oracle_value,abs_diff,tolerance,passed,formula"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("example_p_pos_n1_z_half,n=1;z=0.5,0.14472988584940"), "{row}");
        assert!(row.ends_with(",true,ln(pi) - 1"));
        assert!(lines.next().is_none());
    }

    #[test]
    fn json_uses_same_keys() {
        let mut buf = Vec::new();
        emit_report(&[result("a", 1.0, 1.0)], ReportFormat::Json, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let row = &v[0];
        for key in
            ["identity_id", "params", "closed_value", "oracle_value", "abs_diff", "tolerance", "passed", "formula"]
        {
            assert!(row.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn markdown_lists_suite_and_summary() {
        let v = std::f64::consts::PI.ln() - 1.0;
        let mut bad = result("b", 1.0, 2.0);
        bad.passed = false;
        let mut buf = Vec::new();
        emit_report(&[result("example_p_pos_n1_z_half", v, v), bad], ReportFormat::Markdown, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("1 passed / 2 total"));
        assert!(text.contains("## examples"));
        assert!(text.contains("| example_p_pos_n1_z_half | n=1;z=0.5 | 0.14472988584940"));
        assert!(text.contains("| FAIL |"));
    }

    #[test]
    fn empty_results_are_rejected() {
        assert!(emit_report(&[], ReportFormat::Csv, &mut Vec::new()).is_err());
    }

    #[test]
    fn format_names_parse() {
        assert_eq!("md".parse::<ReportFormat>().unwrap(), ReportFormat::Markdown);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
