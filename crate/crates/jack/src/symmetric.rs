use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use selberg_algebra::{LaurentPoly, MultiIndex, Rational};

use crate::error::{JackError, Result};
use crate::partition::Partition;

/// Symmetric polynomial in the monomial basis `m_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly {
    nvars: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

/// Distinct permutations of `v`, in increasing lexicographic order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl SymmetricPoly {
    pub fn zero(nvars: usize) -> Self {
        SymmetricPoly { nvars, coeffs: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial_sym(&Partition::empty(), nvars).expect("empty partition fits")
    }

    /// The monomial symmetric function `m_lambda` in `nvars` variables.
    pub fn monomial_sym(lambda: &Partition, nvars: usize) -> Result<Self> {
        let mut p = Self::zero(nvars);
        p.check_fits(lambda)?;
        p.coeffs.insert(lambda.clone(), Rational::one());
        Ok(p)
    }

    fn check_fits(&self, lambda: &Partition) -> Result<()> {
        if lambda.len() > self.nvars {
            return Err(JackError::TooManyParts { partition: lambda.to_string(), nvars: self.nvars });
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * m_lambda`.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        self.check_fits(&lambda)?;
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    fn check_same(&self, other: &SymmetricPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(JackError::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymmetricPoly) -> Result<SymmetricPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymmetricPoly) -> Result<SymmetricPoly> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymmetricPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymmetricPoly { nvars: self.nvars, coeffs: self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &SymmetricPoly) -> Result<SymmetricPoly> {
        self.check_same(other)?;
        let prod = self.expand_to_laurent().mul(&other.expand_to_laurent())?;
        Ok(Self::from_laurent(&prod))
    }

    /// Expansion over all distinct permutations of each exponent vector.
    pub fn expand_to_laurent(&self) -> LaurentPoly {
        let terms = self.coeffs.iter().flat_map(|(lambda, c)| {
            distinct_permutations(&lambda.padded(self.nvars)).into_iter().map(move |perm| {
                let exps: Vec<i32> = perm.iter().map(|&e| e as i32).collect();
                (MultiIndex::new(exps), c.clone())
            })
        });
        LaurentPoly::from_terms(self.nvars, false, terms).expect("exponent vectors have nvars entries")
    }

    /// Reads the coefficients of the weakly decreasing exponent vectors of a
    /// symmetric polynomial. Terms with negative exponents are ignored.
    pub fn from_laurent(p: &LaurentPoly) -> SymmetricPoly {
        let mut out = Self::zero(p.nvars());
        for (m, c) in p.terms() {
            let e = &m.exponents()[..p.nvars()];
            if e.windows(2).all(|w| w[0] >= w[1]) && e.iter().all(|&v| v >= 0) {
                let parts: Vec<u32> = e.iter().map(|&v| v as u32).collect();
                let lambda = Partition::new(parts).expect("weakly decreasing");
                out.coeffs.insert(lambda, c.clone());
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(JackError::PointArity { got: point.len(), expected: self.nvars });
        }
        Ok(self.expand_to_laurent().eval_rational(point, &Rational::one()))
    }

    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.nvars {
            return Err(JackError::PointArity { got: point.len(), expected: self.nvars });
        }
        Ok(self.expand_to_laurent().eval_f64(point, 1.0))
    }
}

impl fmt::Display for SymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.coeffs.iter().rev().map(|(l, c)| format!("{c}*m{l}")).collect();
        write!(f, "{}", body.join(" + "))
    }
}
