use selberg_algebra::{format_rational, Rational};

/// One side of a check.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    /// Exact rational, rendered as a reduced `num/den` string.
    Exact(Rational),
    Float(f64),
    /// Anything else with an exact textual form (q-polynomials, partitions, degree lists).
    Text(String),
    None,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

/// Shortest decimal that parses back to the same double.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        serde_json::Number::from_f64(x).map_or_else(|| x.to_string(), |n| n.to_string())
    } else {
        x.to_string()
    }
}

impl Value {
    pub(crate) fn render(&self) -> Option<String> {
        match self {
            Value::Exact(r) => Some(format_rational(r)),
            Value::Float(x) => Some(format_float(*x)),
            Value::Text(s) => Some(s.clone()),
            Value::None => None,
        }
    }

    pub(crate) fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Exact(r) => serde_json::Value::String(format_rational(r)),
            Value::Float(x) => serde_json::Number::from_f64(*x).map_or(serde_json::Value::Null, serde_json::Value::Number),
            Value::Text(s) => serde_json::Value::String(s.clone()),
            Value::None => serde_json::Value::Null,
        }
    }
}

/// Result of one case.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportRecord {
    pub suite: String,
    pub case: String,
    pub lhs: Value,
    pub rhs: Value,
    /// Residual, relative error or z-score, depending on `method`.
    pub residual: Option<f64>,
    pub pass: bool,
    pub method: String,
    pub evals: Option<u64>,
    pub seed: u64,
    /// Wall time in milliseconds, only recorded on request.
    pub ms: Option<f64>,
}
