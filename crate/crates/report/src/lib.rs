//! Named verification suites over the workspace crates, run deterministically from a
//! [`SuiteConfig`] and emitted as JSON lines, CSV or a text summary.

mod config;
mod emit;
mod error;
mod record;
mod run;
mod suite;
mod suites;

pub use config::SuiteConfig;
pub use emit::{emit_report, Format, FIELDS};
pub use error::{ReportError, Result};
pub use record::{format_float, ReportRecord, Value};
pub use run::{list_suites, run_suite};
pub use suite::{Case, CaseCtx, CaseError, CaseResult, Outcome, Suite, SuiteCtx};
