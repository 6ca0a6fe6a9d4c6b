//! Verification harness: compares every closed form with the brute-force
//! oracle over parameter grids, checks individual constants, and writes
//! reports.
//!
//! ```no_run
//! use zetaseries_core::harness::{emit_report, run_suite, ReportFormat, Suite};
//!
//! let results = run_suite(Suite::Core, 1e-10, 4).unwrap();
//! emit_report(&results, ReportFormat::Markdown, &mut std::io::stdout()).unwrap();
//! ```

mod catalog;
mod registry;
mod report;
mod runner;

pub use registry::{z_grid, CheckPoint, Computed, Expression, Identity, Params, Quantity, Registry, Suite};
pub use report::{emit_report, format_float, ReportFormat};
pub use runner::{check_point, run_suite, run_suite_with_constants, summary, CheckResult, DEFAULT_TOLERANCE};
