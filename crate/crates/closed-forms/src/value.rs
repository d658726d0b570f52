use std::fmt;

use crate::error::Result;
use crate::gamma::log_gamma_signed;

/// Signed value stored as `sign * exp(log_abs)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaProductValue {
    pub log_abs: f64,
    pub sign: i8,
}

impl GammaProductValue {
    pub fn one() -> Self {
        GammaProductValue { log_abs: 0.0, sign: 1 }
    }

    pub fn zero() -> Self {
        GammaProductValue { log_abs: f64::NEG_INFINITY, sign: 0 }
    }

    pub fn from_real(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            GammaProductValue { log_abs: x.abs().ln(), sign: if x > 0.0 { 1 } else { -1 } }
        }
    }

    /// `exp(log_abs)`, positive.
    pub fn from_log(log_abs: f64) -> Self {
        GammaProductValue { log_abs, sign: 1 }
    }

    /// `Gamma(x)`.
    pub fn gamma(x: f64) -> Result<Self> {
        let (l, s) = log_gamma_signed(x)?;
        Ok(GammaProductValue { log_abs: l, sign: s as i8 })
    }

    pub fn mul(self, other: Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return Self::zero();
        }
        GammaProductValue { log_abs: self.log_abs + other.log_abs, sign: self.sign * other.sign }
    }

    /// Division; dividing by zero gives a value with infinite magnitude.
    pub fn div(self, other: Self) -> Self {
        if self.sign == 0 {
            return Self::zero();
        }
        let sign = if other.sign == 0 { self.sign } else { self.sign * other.sign };
        GammaProductValue { log_abs: self.log_abs - other.log_abs, sign }
    }

    pub fn recip(self) -> Self {
        Self::one().div(self)
    }

    pub fn powi(self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        if self.sign == 0 {
            return Self::zero();
        }
        let sign = if self.sign < 0 && k % 2 != 0 { -1 } else { 1 };
        GammaProductValue { log_abs: self.log_abs * k as f64, sign }
    }

    /// Multiplies by `Gamma(x)`.
    pub fn times_gamma(self, x: f64) -> Result<Self> {
        Ok(self.mul(Self::gamma(x)?))
    }

    /// Divides by `Gamma(x)`.
    pub fn over_gamma(self, x: f64) -> Result<Self> {
        Ok(self.div(Self::gamma(x)?))
    }

    pub fn times(self, x: f64) -> Self {
        self.mul(Self::from_real(x))
    }

    pub fn value(self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }

    /// `|self/other - 1|`, or infinity when the signs disagree.
    pub fn rel_diff(self, other: Self) -> f64 {
        if self.sign != other.sign {
            return f64::INFINITY;
        }
        if self.sign == 0 {
            return 0.0;
        }
        (self.log_abs - other.log_abs).exp_m1().abs()
    }
}

impl fmt::Display for GammaProductValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        if v.is_finite() && v != 0.0 {
            write!(f, "{v}")
        } else {
            write!(f, "{}exp({})", if self.sign < 0 { "-" } else { "" }, self.log_abs)
        }
    }
}
