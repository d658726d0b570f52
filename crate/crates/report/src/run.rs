use std::time::Instant;

use selberg_par::{derive_seed, map_indexed, with_jobs, Exec};

use crate::config::SuiteConfig;
use crate::error::{ReportError, Result};
use crate::record::{ReportRecord, Value};
use crate::suite::{Case, CaseCtx, Suite, SuiteCtx};
use crate::suites::registry;

/// Looks up every requested suite, rejecting unknown names before anything runs.
fn resolve(config: &SuiteConfig) -> Result<Vec<Suite>> {
    config.validate()?;
    let mut all = registry();
    for name in config.suites.iter().chain(config.grid.keys()) {
        if !all.iter().any(|s| s.name == name) {
            return Err(ReportError::UnknownSuite(name.clone()));
        }
    }
    all.retain(|s| config.suites.iter().any(|n| n == s.name));
    all.sort_by_key(|s| s.name);
    Ok(all)
}

/// Runs the configured suites. Records come out ordered by suite name, then by case
/// parameters; case `i` of a suite is seeded with `derive_seed(seed, [suite, i])`.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<ReportRecord>> {
    let suites = resolve(config)?;
    let mut jobs: Vec<(&'static str, u64, Case)> = Vec::new();
    for suite in &suites {
        let mut cases = (suite.cases)(&SuiteCtx { config, suite: suite.name });
        cases.sort_by(|a, b| a.params.cmp(&b.params));
        for (i, case) in cases.into_iter().enumerate() {
            let seed = derive_seed(config.seed, &[suite.name.as_bytes(), &(i as u64).to_le_bytes()]);
            jobs.push((suite.name, seed, case));
        }
    }
    let records = with_jobs(config.jobs, || {
        map_indexed(Exec::available(), jobs.len(), |i| {
            let (suite, seed, case) = &jobs[i];
            let ctx = CaseCtx { seed: *seed, config, suite };
            let start = Instant::now();
            let outcome = (case.run)(&ctx);
            let ms = config.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
            let base = ReportRecord {
                suite: suite.to_string(),
                case: case.params.clone(),
                lhs: Value::None,
                rhs: Value::None,
                residual: None,
                pass: false,
                method: "error".into(),
                evals: None,
                seed: *seed,
                ms,
            };
            match outcome {
                Ok(o) => ReportRecord {
                    lhs: o.lhs,
                    rhs: o.rhs,
                    residual: o.residual,
                    pass: o.pass,
                    method: o.method.into(),
                    evals: o.evals,
                    ..base
                },
                Err(e) => ReportRecord { lhs: Value::Text(e.0), ..base },
            }
        })
    });
    Ok(records)
}

/// Names and one-line descriptions of every registered suite.
pub fn list_suites() -> Vec<(&'static str, &'static str)> {
    let mut v: Vec<_> = registry().iter().map(|s| (s.name, s.about)).collect();
    v.sort();
    v
}
