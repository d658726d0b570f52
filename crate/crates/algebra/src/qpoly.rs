use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{format_rational, AlgebraError, Rational};

/// Dense polynomial in `q` with exact coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: usize) -> Self {
        let mut c = vec![Rational::zero(); e + 1];
        c[0] += Rational::one();
        c[e] -= Rational::one();
        Self::new(c)
    }

    /// `(q;q)_m = (1-q)(1-q^2)..(1-q^m)`.
    pub fn q_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, i| acc.mul(&Self::one_minus_q_pow(i)))
    }

    /// Gaussian binomial `[n choose k]_q`.
    pub fn q_binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Self::zero();
        }
        let num = Self::q_factorial(n);
        let den = Self::q_factorial(k).mul(&Self::q_factorial(n - k));
        num.div_exact(&den).expect("Gaussian binomials are polynomials")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Long division that must leave no remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        Ok(q)
    }

    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::InexactDivision)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * q + crate::to_f64(c))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
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
            let mono = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
