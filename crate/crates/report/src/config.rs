use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{ReportError, Result};

/// What to run and how. Read from a TOML document; command-line flags override it.
///
/// ```toml
/// suites = ["dyson", "jack"]
/// seed = 7            # or "18446744073709551615"
/// jobs = 4
/// term_ceiling = 2000000
/// sample_ceiling = 100000
///
/// [tolerances]
/// "closed_numeric.quad" = 1e-7
///
/// [grid.dyson]
/// max_n = 3
/// max_sum = 4
/// ```
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub suites: Vec<String>,
    /// TOML integers stop at `i64::MAX`; larger seeds can be given as strings.
    #[serde(default, deserialize_with = "seed_from_toml")]
    pub seed: u64,
    /// Keys are `suite` or `suite.check`; the more specific key wins.
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    /// Worker threads; `None` uses the global pool.
    #[serde(default)]
    pub jobs: Option<usize>,
    /// Cap on intermediate polynomial terms in exact expansions.
    #[serde(default)]
    pub term_ceiling: Option<usize>,
    /// Cap on samples per stochastic case.
    #[serde(default)]
    pub sample_ceiling: Option<u64>,
    /// Per-suite parameter grid overrides.
    #[serde(default)]
    pub grid: BTreeMap<String, BTreeMap<String, f64>>,
    /// Record wall time per case (breaks byte-identical reruns).
    #[serde(default)]
    pub timing: bool,
}

fn seed_from_toml<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<u64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(u64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Int(v) => Ok(v),
        Raw::Text(s) => s.trim().parse().map_err(|_| serde::de::Error::custom(format!("seed `{s}` is not a u64"))),
    }
}

impl SuiteConfig {
    pub fn new(suites: &[&str]) -> Self {
        SuiteConfig { suites: suites.iter().map(|s| s.to_string()).collect(), ..Default::default() }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// Parses `name=value` as given on the command line.
    pub fn set_tolerance(&mut self, assignment: &str) -> Result<()> {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| ReportError::Config(format!("tolerance `{assignment}` is not name=value")))?;
        let v: f64 =
            value.trim().parse().map_err(|_| ReportError::Config(format!("tolerance `{assignment}` is not a number")))?;
        self.tolerances.insert(name.trim().to_string(), v);
        Ok(())
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.jobs == Some(0) {
            return Err(ReportError::Config("jobs must be positive".into()));
        }
        for (k, v) in &self.tolerances {
            if !(v.is_finite() && *v >= 0.0) {
                return Err(ReportError::Config(format!("tolerance {k} = {v} must be finite and nonnegative")));
            }
        }
        if self.sample_ceiling == Some(0) || self.term_ceiling == Some(0) {
            return Err(ReportError::Config("ceilings must be positive".into()));
        }
        Ok(())
    }
}
