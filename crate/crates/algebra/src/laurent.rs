use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{format_rational, AlgebraError, QPoly, Rational};

/// Default ceiling on the number of stored terms in any intermediate product.
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

/// Exponent vector `(k_1, .., k_n[, k_q])`; the trailing `q` slot is present
/// only for q-carrying polynomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<i32>);

impl MultiIndex {
    pub fn new(exponents: Vec<i32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zeros(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<i32>> for MultiIndex {
    fn from(v: Vec<i32>) -> Self {
        MultiIndex(v)
    }
}

/// Sparse Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    has_q: bool,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize, has_q: bool) -> Self {
        LaurentPoly { nvars, has_q, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, has_q: bool, c: Rational) -> Self {
        let mut p = Self::zero(nvars, has_q);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zeros(p.arity()), c);
        }
        p
    }

    pub fn one(nvars: usize, has_q: bool) -> Self {
        Self::constant(nvars, has_q, Rational::one())
    }

    /// `coeff * x^exps * q^q_exp`; `q_exp` must be zero without a `q` slot.
    pub fn monomial(
        nvars: usize,
        has_q: bool,
        exps: &[i32],
        q_exp: i32,
        coeff: Rational,
    ) -> Result<Self, AlgebraError> {
        if exps.len() != nvars {
            return Err(AlgebraError::ArityMismatch {
                left: format!("{nvars}"),
                right: format!("{}", exps.len()),
            });
        }
        if q_exp < 0 {
            return Err(AlgebraError::NegativeQExponent(q_exp));
        }
        if q_exp != 0 && !has_q {
            return Err(AlgebraError::VariableOutOfRange { index: nvars, arity: nvars });
        }
        let mut e = exps.to_vec();
        if has_q {
            e.push(q_exp);
        }
        let mut p = Self::zero(nvars, has_q);
        if !coeff.is_zero() {
            p.terms.insert(MultiIndex(e), coeff);
        }
        Ok(p)
    }

    /// The variable `x_{index}` (zero based).
    pub fn variable(nvars: usize, has_q: bool, index: usize) -> Result<Self, AlgebraError> {
        if index >= nvars {
            return Err(AlgebraError::VariableOutOfRange { index, arity: nvars });
        }
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(nvars, has_q, &e, 0, Rational::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, has_q: bool, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Self::zero(nvars, has_q);
        for (m, c) in terms {
            p.check_index(&m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn check_index(&self, m: &MultiIndex) -> Result<(), AlgebraError> {
        if m.len() != self.arity() {
            return Err(AlgebraError::ArityMismatch {
                left: format!("{}", self.arity()),
                right: format!("{}", m.len()),
            });
        }
        if self.has_q && m.0[self.nvars] < 0 {
            return Err(AlgebraError::NegativeQExponent(m.0[self.nvars]));
        }
        Ok(())
    }

    fn add_term(&mut self, m: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Number of `x` variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn has_q(&self) -> bool {
        self.has_q
    }

    /// Length of every exponent vector (`nvars`, plus one with `q`).
    pub fn arity(&self) -> usize {
        self.nvars + usize::from(self.has_q)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn same_shape(&self, other: &LaurentPoly) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars || self.has_q != other.has_q {
            return Err(AlgebraError::ArityMismatch {
                left: self.shape_label(),
                right: other.shape_label(),
            });
        }
        Ok(())
    }

    fn shape_label(&self) -> String {
        if self.has_q {
            format!("{}+q", self.nvars)
        } else {
            format!("{}", self.nvars)
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.nvars, self.has_q);
        }
        LaurentPoly {
            nvars: self.nvars,
            has_q: self.has_q,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.mul_capped(other, DEFAULT_MAX_TERMS)
    }

    /// Product that aborts once the partial result holds more than `ceiling` terms.
    pub fn mul_capped(&self, other: &LaurentPoly, ceiling: usize) -> Result<LaurentPoly, AlgebraError> {
        self.same_shape(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = Self::zero(self.nvars, self.has_q);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.add(mb), ca * cb);
            }
            if out.len() > ceiling {
                return Err(AlgebraError::TermCeiling { count: out.len(), ceiling });
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<LaurentPoly, AlgebraError> {
        self.pow_capped(e, DEFAULT_MAX_TERMS)
    }

    /// Repeated squaring.
    pub fn pow_capped(&self, mut e: u32, ceiling: usize) -> Result<LaurentPoly, AlgebraError> {
        let mut acc = Self::one(self.nvars, self.has_q);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_capped(&base, ceiling)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_capped(&base, ceiling)?;
            }
        }
        Ok(acc)
    }

    /// Terms whose exponent vanishes in every selected `x` variable.
    pub fn constant_term(&self, vars: &[usize]) -> Result<LaurentPoly, AlgebraError> {
        for &v in vars {
            if v >= self.nvars {
                return Err(AlgebraError::VariableOutOfRange { index: v, arity: self.nvars });
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            has_q: self.has_q,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.0[v] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Constant term in all `x` variables.
    pub fn ct_all(&self) -> LaurentPoly {
        let all: Vec<usize> = (0..self.nvars).collect();
        self.constant_term(&all).expect("all indices are in range")
    }

    /// Constant term in all `x` variables as a polynomial in `q`.
    pub fn ct_q(&self) -> QPoly {
        self.ct_all().to_qpoly().expect("x-free after extraction")
    }

    /// Constant term in all `x` variables of a `q`-free polynomial.
    pub fn ct_value(&self) -> Rational {
        let q = self.ct_q();
        q.coeff(0)
    }

    /// Interprets an `x`-free polynomial as a polynomial in `q`.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.0[..self.nvars].iter().any(|&e| e != 0) {
                return None;
            }
            let d = if self.has_q { m.0[self.nvars] as usize } else { 0 };
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] += c;
        }
        Some(QPoly::new(coeffs))
    }

    /// `CT[self * other]` without forming the full product.
    pub fn ct_of_product(&self, other: &LaurentPoly) -> Result<QPoly, AlgebraError> {
        self.same_shape(other)?;
        let n = self.nvars;
        let mut by_x: BTreeMap<&[i32], Vec<(i32, &Rational)>> = BTreeMap::new();
        for (m, c) in &other.terms {
            let q = if self.has_q { m.0[n] } else { 0 };
            by_x.entry(&m.0[..n]).or_default().push((q, c));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut key = vec![0i32; n];
        for (m, c) in &self.terms {
            for (k, e) in key.iter_mut().zip(&m.0[..n]) {
                *k = -e;
            }
            if let Some(list) = by_x.get(key.as_slice()) {
                let qa = if self.has_q { m.0[n] } else { 0 };
                for (qb, cb) in list {
                    let d = (qa + qb) as usize;
                    if coeffs.len() <= d {
                        coeffs.resize(d + 1, Rational::zero());
                    }
                    coeffs[d] += c * *cb;
                }
            }
        }
        Ok(QPoly::new(coeffs))
    }

    /// Replaces every `x_i` by `1/x_i`.
    pub fn invert_x(&self) -> LaurentPoly {
        let n = self.nvars;
        LaurentPoly {
            nvars: n,
            has_q: self.has_q,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    for v in &mut e[..n] {
                        *v = -*v;
                    }
                    (MultiIndex(e), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes a rational value for `q`, dropping the `q` slot.
    pub fn substitute_q(&self, value: &Rational) -> LaurentPoly {
        if !self.has_q {
            return self.clone();
        }
        let n = self.nvars;
        let mut out = Self::zero(n, false);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for _ in 0..m.0[n] {
                v *= value;
            }
            out.add_term(MultiIndex(m.0[..n].to_vec()), v);
        }
        out
    }

    /// Maximum total `x`-degree over terms (`None` for the zero polynomial).
    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.0[..self.nvars].iter().map(|&e| e as i64).sum())
            .max()
    }

    /// True when every permutation of `x` variables maps the polynomial to itself.
    pub fn is_symmetric(&self) -> bool {
        let n = self.nvars;
        if n < 2 {
            return true;
        }
        // Adjacent transpositions generate the symmetric group.
        (0..n - 1).all(|i| {
            self.terms.iter().all(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(i, i + 1);
                self.terms.get(&MultiIndex(e)) == Some(c)
            })
        })
    }

    /// Floating-point evaluation at `x` (and `q`, ignored when absent).
    pub fn eval_f64(&self, x: &[f64], q: f64) -> f64 {
        let n = self.nvars;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = crate::to_f64(c);
                for (xi, &e) in x.iter().zip(&m.0[..n]) {
                    v *= xi.powi(e);
                }
                if self.has_q {
                    v *= q.powi(m.0[n]);
                }
                v
            })
            .sum()
    }

    /// Exact evaluation at a rational point with no zero coordinates where
    /// negative powers occur.
    pub fn eval_rational(&self, x: &[Rational], q: &Rational) -> Rational {
        let n = self.nvars;
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (xi, &e) in x.iter().zip(&m.0[..n]) {
                v *= pow_rational(xi, e);
            }
            if self.has_q {
                v *= pow_rational(q, m.0[n]);
            }
            acc += v;
        }
        acc
    }
}

fn pow_rational(x: &Rational, e: i32) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if i == self.nvars { "q".to_string() } else { format!("x{}", i + 1) };
                if !mono.is_empty() {
                    mono.push('*');
                }
                if e == 1 {
                    mono.push_str(&name);
                } else {
                    mono.push_str(&format!("{name}^{e}"));
                }
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::variable(n, false, i).unwrap()
    }

    fn mono(n: usize, e: &[i32], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(n, false, e, 0, int(c)).unwrap()
    }

    #[test]
    fn two_variable_dyson_factor() {
        let one = LaurentPoly::one(2, false);
        let a = one.sub(&mono(2, &[1, -1], 1)).unwrap();
        let b = one.sub(&mono(2, &[-1, 1], 1)).unwrap();
        let p = a.mul(&b).unwrap();
        let expect = LaurentPoly::from_terms(
            2,
            false,
            vec![
                (MultiIndex::new(vec![0, 0]), int(2)),
                (MultiIndex::new(vec![1, -1]), int(-1)),
                (MultiIndex::new(vec![-1, 1]), int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.ct_value(), int(2));
    }

    #[test]
    fn pow_zero_is_one() {
        let f = x(2, 0).add(&x(2, 1)).unwrap();
        assert_eq!(f.pow(0).unwrap(), LaurentPoly::one(2, false));
    }

    #[test]
    fn q_morris_n1_factor() {
        let one = LaurentPoly::one(1, true);
        let xv = LaurentPoly::variable(1, true, 0).unwrap();
        let q_over_x = LaurentPoly::monomial(1, true, &[-1], 1, int(1)).unwrap();
        let p = one.sub(&xv).unwrap().mul(&one.sub(&q_over_x).unwrap()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.ct_q(), QPoly::new(vec![int(1), int(1)]));
    }

    #[test]
    fn constant_of_constant() {
        let c = LaurentPoly::constant(3, false, rat(5, 7));
        assert_eq!(c.ct_value(), rat(5, 7));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::one(2, false);
        let b = LaurentPoly::one(3, false);
        assert!(matches!(a.mul(&b), Err(AlgebraError::ArityMismatch { .. })));
        let c = LaurentPoly::one(2, true);
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn ceiling_aborts() {
        let f = LaurentPoly::one(3, false)
            .add(&x(3, 0))
            .unwrap()
            .add(&x(3, 1))
            .unwrap()
            .add(&x(3, 2))
            .unwrap();
        let err = f.pow_capped(20, 50).unwrap_err();
        assert!(matches!(err, AlgebraError::TermCeiling { ceiling: 50, .. }));
    }

    #[test]
    fn partial_constant_term() {
        // x1*x2^-1 + x2 + 3
        let f = mono(2, &[1, -1], 1).add(&mono(2, &[0, 1], 1)).unwrap().add(&LaurentPoly::constant(2, false, int(3))).unwrap();
        let ct1 = f.constant_term(&[0]).unwrap();
        assert_eq!(ct1, mono(2, &[0, 1], 1).add(&LaurentPoly::constant(2, false, int(3))).unwrap());
    }

    #[test]
    fn pairing_matches_full_product() {
        let f = mono(2, &[1, -1], 2).add(&mono(2, &[0, 1], -3)).unwrap().add(&LaurentPoly::one(2, false)).unwrap();
        let g = mono(2, &[-1, 1], 5).add(&mono(2, &[2, 2], 1)).unwrap().add(&mono(2, &[0, 0], 4)).unwrap();
        assert_eq!(f.ct_of_product(&g).unwrap(), f.mul(&g).unwrap().ct_q());
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentPoly::one(1, true)
            .sub(&LaurentPoly::variable(1, true, 0).unwrap())
            .unwrap();
        assert_eq!(p.to_string(), "1 - x1");
    }
}
