//! Exact rational arithmetic and sparse multivariate Laurent polynomials.
//!
//! Polynomials live in `x_1..x_n` and optionally one extra variable `q` that
//! only carries nonnegative exponents. Terms are kept in a `BTreeMap`, so
//! iteration order is lexicographic on exponent vectors and reproducible.

mod error;
mod laurent;
mod product;
mod qpoly;

pub use error::AlgebraError;
pub use laurent::{LaurentPoly, MultiIndex, DEFAULT_MAX_TERMS};
pub use product::{build_ct_product, Factor, ProductSpec};
pub use qpoly::QPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

use num_traits::{One, Zero};

/// `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Renders a rational as `num/den`, or just `num` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Best-effort conversion to `f64` (big values become infinite).
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Shift both parts so the quotient fits in a double.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift_n = (nb - 900).max(0) as usize;
    let shift_d = (db - 900).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 5), BigInt::zero());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(1, -3)), "-1/3");
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::from_integer(factorial(200)) / Rational::from_integer(factorial(199));
        assert!((to_f64(&big) - 200.0).abs() < 1e-9);
    }
}
