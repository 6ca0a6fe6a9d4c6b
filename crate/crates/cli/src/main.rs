//! `zetaseries`: evaluate rational zeta series and verify their closed forms.
//!
//! Exit codes: 0 when everything passed, 1 when a check failed or an
//! evaluation broke down, 2 for usage and domain errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zetaseries_core::closedform::ClosedForms;
use zetaseries_core::harness::{emit_report, run_suite, summary, ReportFormat, Suite, DEFAULT_TOLERANCE};
use zetaseries_core::oracle::{sum_series, Family, SeriesSpec, SignConvention};
use zetaseries_core::{ConstantsTable, Error, Evaluation};

#[derive(Debug, Parser)]
#[command(name = "zetaseries", version, about = "Rational zeta series: closed forms and brute-force verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one series by its closed form, the oracle, or both.
    Eval(EvalArgs),
    /// Compare closed forms with the oracle over a suite of grids.
    Verify(VerifyArgs),
    /// Print the table of constants used by the closed forms.
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, clap::Args)]
struct EvalArgs {
    /// Series family, e.g. P, Pmn, Q, KKPlusN, HalfInt, FibP, BernoulliOdd.
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    z: f64,
    /// alternating for (-1)^k, positive for all-plus signs.
    #[arg(long, default_value = "alternating")]
    sign: SignConvention,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    /// Absolute accuracy requested from the oracle.
    #[arg(long, env = "ZETASERIES_TOL")]
    tol: Option<f64>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// core, examples, fibonacci, bernoulli, general, special_values or all.
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, env = "ZETASERIES_TOL")]
    tol: Option<f64>,
    /// json, csv or markdown.
    #[arg(long, default_value = "csv")]
    format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "ZETASERIES_JOBS")]
    jobs: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Eval(args) => eval(&args),
        Command::Verify(args) => verify(&args),
        Command::Constants => print_json(&json!(ConstantsTable::standard())).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Pole(_) | Error::NoClosedForm(_) | Error::ContractViolation(_) => 2,
        _ => 1,
    }
}

/// Oracle accuracy used by `eval` when no tolerance is given.
const EVAL_TOLERANCE: f64 = 1e-12;

fn tolerance(flag: Option<f64>, default: f64) -> Result<f64, Error> {
    let tol = flag.unwrap_or(default);
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

fn evaluation_json(e: &Evaluation) -> Value {
    json!({ "value": e.value, "err_bound": e.err_bound, "terms_used": e.terms_used })
}

fn eval(args: &EvalArgs) -> Result<bool, Error> {
    let tol = tolerance(args.tol, EVAL_TOLERANCE)?;
    let mut spec = SeriesSpec::new(args.family, args.z, args.sign);
    spec.n = args.n;
    spec.m = args.m;
    spec.p = args.p;
    spec.validate()?;
    let mut doc = json!({
        "family": spec.family.name(),
        "sign": format!("{:?}", spec.sign).to_lowercase(),
        "n": spec.n,
        "m": spec.m,
        "p": spec.p,
        "z": spec.z,
    });
    let mut closed = None;
    let mut oracle = None;
    if args.method != Method::Oracle {
        let id = ClosedForms::identity_for(&spec)?;
        let v = ClosedForms::standard().eval_identity(id, &spec)?;
        let mut j = evaluation_json(&v);
        j["identity"] = json!(id.name());
        doc["closed"] = j;
        closed = Some(v);
    }
    if args.method != Method::Closed {
        let v = sum_series(&spec, tol)?;
        doc["oracle"] = evaluation_json(&v);
        oracle = Some(v);
    }
    if let (Some(c), Some(o)) = (closed, oracle) {
        doc["abs_diff"] = json!((c.value - o.value).abs());
        doc["combined_bound"] = json!(c.err_bound + o.err_bound);
    }
    print_json(&doc)?;
    Ok(true)
}

fn verify(args: &VerifyArgs) -> Result<bool, Error> {
    let tol = tolerance(args.tol, DEFAULT_TOLERANCE)?;
    let jobs = match args.jobs {
        Some(0) => return Err(Error::Domain("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let results = run_suite(args.suite, tol, jobs)?;
    match &args.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit_report(&results, args.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            emit_report(&results, args.format, &mut w)?;
            w.flush()?;
        }
    }
    let (passed, total) = summary(&results);
    eprintln!("{passed} passed / {total} total");
    for r in results.iter().filter(|r| !r.passed) {
        eprintln!("FAIL {} {}: {}", r.identity_id, r.params, r.diagnostic.as_deref().unwrap_or(""));
    }
    Ok(passed == total)
}

fn print_json(v: &Value) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Error::Report(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}
