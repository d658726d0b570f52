use std::fmt::Display;

use crate::config::SuiteConfig;
use crate::record::Value;

/// Why a case could not produce an outcome; recorded as a failure.
#[derive(Debug)]
pub struct CaseError(pub String);

impl<E: Display> From<E> for CaseError {
    fn from(e: E) -> Self {
        CaseError(e.to_string())
    }
}

pub type CaseResult = std::result::Result<Outcome, CaseError>;

/// What a case reports back.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub lhs: Value,
    pub rhs: Value,
    pub residual: Option<f64>,
    pub pass: bool,
    pub method: &'static str,
    pub evals: Option<u64>,
}

impl Outcome {
    /// Exact comparison.
    pub fn exact(lhs: impl Into<Value>, rhs: impl Into<Value>, equal: bool) -> Self {
        Outcome { lhs: lhs.into(), rhs: rhs.into(), residual: None, pass: equal, method: "exact", evals: None }
    }

    /// Exact equality of values that have a canonical text form.
    pub fn text(lhs: String, rhs: String) -> Self {
        let pass = lhs == rhs;
        Outcome::exact(Value::Text(lhs), Value::Text(rhs), pass)
    }

    /// Relative error `|got - want| / |want|` against `tol`.
    pub fn relative(got: f64, want: f64, tol: f64, method: &'static str) -> Self {
        let residual = (got - want).abs() / want.abs();
        Outcome { lhs: got.into(), rhs: want.into(), residual: Some(residual), pass: residual <= tol, method, evals: None }
    }

    /// Absolute error against `tol`.
    pub fn absolute(got: f64, want: f64, tol: f64, method: &'static str) -> Self {
        let residual = (got - want).abs();
        Outcome { lhs: got.into(), rhs: want.into(), residual: Some(residual), pass: residual <= tol, method, evals: None }
    }

    /// A residual that is already computed, with `lhs`/`rhs` for context.
    pub fn residual(lhs: impl Into<Value>, rhs: impl Into<Value>, residual: f64, tol: f64, method: &'static str) -> Self {
        Outcome { lhs: lhs.into(), rhs: rhs.into(), residual: Some(residual), pass: residual <= tol, method, evals: None }
    }

    /// `|got - want| / std_err` against `sigmas`.
    pub fn z_score(got: f64, want: f64, std_err: f64, sigmas: f64, method: &'static str) -> Self {
        let z = (got - want).abs() / std_err;
        Outcome { lhs: got.into(), rhs: want.into(), residual: Some(z), pass: z < sigmas, method, evals: None }
    }

    /// A p-value that must exceed `level`; `lhs` is the test statistic.
    pub fn p_value(statistic: f64, p: f64, level: f64, method: &'static str) -> Self {
        Outcome { lhs: statistic.into(), rhs: Value::None, residual: Some(p), pass: p > level, method, evals: None }
    }

    pub fn with_evals(mut self, evals: u64) -> Self {
        self.evals = Some(evals);
        self
    }
}

/// Settings visible while building cases.
pub struct SuiteCtx<'a> {
    pub(crate) config: &'a SuiteConfig,
    pub(crate) suite: &'static str,
}

impl SuiteCtx<'_> {
    /// Grid parameter `key` of this suite.
    pub fn grid(&self, key: &str, default: f64) -> f64 {
        self.config.grid.get(self.suite).and_then(|g| g.get(key)).copied().unwrap_or(default)
    }

    pub fn grid_usize(&self, key: &str, default: usize) -> usize {
        self.grid(key, default as f64).max(0.0) as usize
    }
}

/// Settings visible while running one case.
pub struct CaseCtx<'a> {
    pub seed: u64,
    pub(crate) config: &'a SuiteConfig,
    pub(crate) suite: &'static str,
}

impl CaseCtx<'_> {
    /// Tolerance `suite.key`, then `suite`, then `default`.
    pub fn tol(&self, key: &str, default: f64) -> f64 {
        let t = &self.config.tolerances;
        t.get(&format!("{}.{key}", self.suite)).or_else(|| t.get(self.suite)).copied().unwrap_or(default)
    }

    pub fn samples(&self, default: u64) -> u64 {
        self.config.sample_ceiling.map_or(default, |c| c.min(default))
    }

    pub fn term_ceiling(&self, default: usize) -> usize {
        self.config.term_ceiling.unwrap_or(default)
    }
}

type Runner = Box<dyn Fn(&CaseCtx) -> CaseResult + Send + Sync>;

pub struct Case {
    pub params: String,
    pub(crate) run: Runner,
}

impl Case {
    pub fn new(params: impl Into<String>, run: impl Fn(&CaseCtx) -> CaseResult + Send + Sync + 'static) -> Self {
        Case { params: params.into(), run: Box::new(run) }
    }
}

/// A named family of cases.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub(crate) cases: fn(&SuiteCtx) -> Vec<Case>,
}
