

use crate::{binomial, AlgebraError, LaurentPoly, MultiIndex, Rational, DEFAULT_MAX_TERMS};

/// One factor of a constant-term product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `(1 - x^exps q^q_exp)^power`.
    Binomial { exps: Vec<i32>, q_exp: i32, power: i64 },
    /// `(x^exps q^q_exp; q)_order = prod_{i<order} (1 - x^exps q^{q_exp + i})`.
    QShifted { exps: Vec<i32>, q_exp: i32, order: i64 },
}

/// Product of factors over `nvars` variables (plus `q` when requested).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub nvars: usize,
    pub has_q: bool,
    pub factors: Vec<Factor>,
    pub max_terms: usize,
}

impl ProductSpec {
    pub fn new(nvars: usize, has_q: bool) -> Self {
        ProductSpec { nvars, has_q, factors: Vec::new(), max_terms: DEFAULT_MAX_TERMS }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn binomial(mut self, exps: Vec<i32>, power: i64) -> Self {
        self.factors.push(Factor::Binomial { exps, q_exp: 0, power });
        self
    }

    pub fn q_shifted(mut self, exps: Vec<i32>, q_exp: i32, order: i64) -> Self {
        self.factors.push(Factor::QShifted { exps, q_exp, order });
        self
    }

    /// Dyson product `prod_{i != j} (1 - x_i/x_j)^{a_i}`.
    pub fn dyson(a: &[i64]) -> Self {
        let n = a.len();
        let mut spec = Self::new(n, false);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    spec = spec.binomial(ratio(n, i, j), a[i]);
                }
            }
        }
        spec
    }

    /// q-Dyson product `prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}`.
    pub fn q_dyson(a: &[i64]) -> Self {
        let n = a.len();
        let mut spec = Self::new(n, true);
        for i in 0..n {
            for j in i + 1..n {
                spec = spec.q_shifted(ratio(n, i, j), 0, a[i]).q_shifted(ratio(n, j, i), 1, a[j]);
            }
        }
        spec
    }
}

fn ratio(n: usize, i: usize, j: usize) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] += 1;
    e[j] -= 1;
    e
}

fn check_order(v: i64) -> Result<u32, AlgebraError> {
    if v < 0 {
        return Err(AlgebraError::NegativePower(v));
    }
    u32::try_from(v).map_err(|_| AlgebraError::NegativePower(v))
}

fn expand_binomial(
    nvars: usize,
    has_q: bool,
    exps: &[i32],
    q_exp: i32,
    power: u32,
) -> Result<LaurentPoly, AlgebraError> {
    // (1 - m)^p = sum_k C(p,k) (-1)^k m^k
    let mut terms = Vec::with_capacity(power as usize + 1);
    for k in 0..=power as i32 {
        let mut e: Vec<i32> = exps.iter().map(|&v| v * k).collect();
        if has_q {
            e.push(q_exp * k);
        }
        let mut c = Rational::from_integer(binomial(power as i64, k as i64));
        if k % 2 == 1 {
            c = -c;
        }
        terms.push((MultiIndex::new(e), c));
    }
    LaurentPoly::from_terms(nvars, has_q, terms)
}

/// Expands the product exactly, factor by factor, under the term ceiling.
pub fn build_ct_product(spec: &ProductSpec) -> Result<LaurentPoly, AlgebraError> {
    let mut acc = LaurentPoly::one(spec.nvars, spec.has_q);
    for f in &spec.factors {
        match f {
            Factor::Binomial { exps, q_exp, power } => {
                let p = check_order(*power)?;
                check_shape(spec, exps, *q_exp)?;
                let poly = expand_binomial(spec.nvars, spec.has_q, exps, *q_exp, p)?;
                acc = acc.mul_capped(&poly, spec.max_terms)?;
            }
            Factor::QShifted { exps, q_exp, order } => {
                let m = check_order(*order)?;
                check_shape(spec, exps, *q_exp)?;
                for i in 0..m as i32 {
                    let poly = expand_binomial(spec.nvars, spec.has_q, exps, q_exp + i, 1)?;
                    acc = acc.mul_capped(&poly, spec.max_terms)?;
                }
            }
        }
    }
    Ok(acc)
}

fn check_shape(spec: &ProductSpec, exps: &[i32], q_exp: i32) -> Result<(), AlgebraError> {
    if exps.len() != spec.nvars {
        return Err(AlgebraError::ArityMismatch {
            left: spec.nvars.to_string(),
            right: exps.len().to_string(),
        });
    }
    if q_exp < 0 {
        return Err(AlgebraError::NegativeQExponent(q_exp));
    }
    if q_exp != 0 && !spec.has_q {
        return Err(AlgebraError::VariableOutOfRange { index: spec.nvars, arity: spec.nvars });
    }
    Ok(())
}

impl Default for ProductSpec {
    fn default() -> Self {
        Self::new(0, false)
    }
}
