//! Real and complex log-gamma, digamma and trigamma.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{ClosedFormError, Result};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const SHIFT: f64 = 10.0;

// B_{2k} / (2k (2k-1)) for the Stirling series.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

// B_{2k} for digamma/trigamma asymptotics.
const BERNOULLI: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// `sin(pi x)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x.is_infinite() || x.is_nan() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round();
    // r in [-1, 1]
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    let (s, y) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let y = if y > 0.5 { 1.0 - y } else { y };
    s * (PI * y).sin()
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = 0.0;
    for c in STIRLING {
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

/// `ln|Gamma(x)|` and the sign of `Gamma(x)`.
pub fn log_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(ClosedFormError::Domain("log_gamma of NaN".into()));
    }
    if is_pole(x) {
        return Err(ClosedFormError::Pole { arg: x, context: "log_gamma".into() });
    }
    if x == 1.0 || x == 2.0 {
        return Ok((0.0, 1.0));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = log_gamma_signed(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - lg, s.signum()));
    }
    let mut y = x;
    let mut shift = 0.0;
    let mut prod = 1.0;
    while y < SHIFT {
        prod *= y;
        y += 1.0;
        if prod > 1e280 {
            shift += prod.ln();
            prod = 1.0;
        }
    }
    shift += prod.ln();
    let lg = (y - 0.5) * y.ln() - y + HALF_LN_2PI + stirling_tail(y) - shift;
    Ok((lg, 1.0))
}

/// `ln Gamma(x)` for `x > 0`; for negative non-integer `x` returns `ln|Gamma(x)|`.
pub fn log_gamma(x: f64) -> Result<f64> {
    log_gamma_signed(x).map(|(v, _)| v)
}

/// `Gamma(x)` as a double (overflows to infinity for large `x`).
pub fn gamma(x: f64) -> Result<f64> {
    let (l, s) = log_gamma_signed(x)?;
    Ok(s * l.exp())
}

/// Digamma `psi(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(ClosedFormError::Pole { arg: x, context: "digamma".into() });
    }
    if x < 0.5 {
        // psi(1-x) - psi(x) = pi cot(pi x)
        let cot = cos_pi(x) / sin_pi(x);
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < SHIFT {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut series = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        series += b / (2.0 * (k as f64 + 1.0)) * pow;
        pow *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

/// Trigamma `psi'(x)`.
pub fn trigamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(ClosedFormError::Pole { arg: x, context: "trigamma".into() });
    }
    if x < 0.5 {
        let s = sin_pi(x);
        return Ok(PI * PI / (s * s) - trigamma(1.0 - x)?);
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < SHIFT {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut series = inv + 0.5 * inv2;
    for b in BERNOULLI {
        series += b * pow;
        pow *= inv2;
    }
    Ok(acc + series)
}

/// `cos(pi x)` with exact zeros at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// Principal-branch-free `ln Gamma(z)`: the imaginary part is correct modulo `2 pi`,
/// so `exp` of the result is exactly `Gamma(z)`.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && is_pole(z.re) {
        return Err(ClosedFormError::Pole { arg: z.re, context: "log_gamma_complex".into() });
    }
    if z.re < 0.5 {
        let pi = Complex64::new(PI, 0.0);
        let s = (pi * z).sin();
        return Ok(pi.ln() - s.ln() - log_gamma_complex(Complex64::new(1.0, 0.0) - z)?);
    }
    let mut y = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while y.norm() < SHIFT + 2.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = y.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut tail = Complex64::new(0.0, 0.0);
    for c in STIRLING {
        tail += pow * c;
        pow *= inv2;
    }
    Ok((y - 0.5) * y.ln() - y + HALF_LN_2PI + tail - shift)
}

/// `Gamma(z)` for complex `z`.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma_complex(z)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn classical_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(log_gamma(2.0).unwrap().abs() < 1e-14);
        assert_relative_eq!(log_gamma(0.5).unwrap(), PI.sqrt().ln(), epsilon = 1e-14);
        assert_relative_eq!(gamma(5.0).unwrap(), 24.0, max_relative = 1e-14);
        assert_relative_eq!(log_gamma(100.0).unwrap(), 359.134_205_369_575_4, max_relative = 1e-14);
        assert_relative_eq!(gamma(-0.5).unwrap(), -2.0 * PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gamma(-1.5).unwrap(), 4.0 / 3.0 * PI.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        assert!(matches!(log_gamma(0.0), Err(ClosedFormError::Pole { .. })));
        assert!(matches!(log_gamma(-3.0), Err(ClosedFormError::Pole { .. })));
        assert!(digamma(-2.0).is_err());
    }

    #[test]
    fn digamma_recurrence() {
        assert_relative_eq!(digamma(2.0).unwrap() - digamma(1.0).unwrap(), 1.0, epsilon = 1e-14);
        assert_relative_eq!(digamma(1.0).unwrap(), -0.577_215_664_901_532_9, epsilon = 1e-14);
        assert_relative_eq!(digamma(-0.5).unwrap(), 0.036_489_973_978_576_52, epsilon = 1e-13);
    }

    #[test]
    fn trigamma_values() {
        assert_relative_eq!(trigamma(1.0).unwrap(), PI * PI / 6.0, epsilon = 1e-14);
        assert_relative_eq!(trigamma(0.5).unwrap(), PI * PI / 2.0, epsilon = 1e-13);
        assert_relative_eq!(trigamma(3.0).unwrap(), PI * PI / 6.0 - 1.25, epsilon = 1e-14);
    }

    #[test]
    fn complex_matches_real() {
        for &x in &[0.3, 1.0, 2.5, 7.25, 30.0, -0.4, -2.7] {
            let g = gamma_complex(Complex64::new(x, 0.0)).unwrap();
            let r = gamma(x).unwrap();
            assert_relative_eq!(g.re, r, max_relative = 1e-13);
            assert!(g.im.abs() < 1e-12 * r.abs());
        }
    }

    #[test]
    fn complex_reflection() {
        // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
        for &y in &[0.3, 1.0, 4.0] {
            let g = gamma_complex(Complex64::new(0.5, y)).unwrap();
            assert_relative_eq!(g.norm_sqr(), PI / (PI * y).cosh(), max_relative = 1e-13);
        }
    }

    #[test]
    fn sin_pi_exact_zeros() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-2.0), 0.0);
        assert_relative_eq!(sin_pi(0.5), 1.0);
        assert_relative_eq!(sin_pi(-1.5), 1.0);
    }
}
