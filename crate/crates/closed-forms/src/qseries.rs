//! q-shifted factorials, the q-gamma function and the q-Selberg product.

use crate::error::{ClosedFormError, Result};
use crate::GammaProductValue as G;

/// Length of a q-shifted factorial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QOrder {
    Finite(i64),
    Infinite,
}

/// Tail bound used to truncate infinite products.
pub const Q_TAIL_TOL: f64 = 1e-14;

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(ClosedFormError::Domain(format!("need 0 < q < 1, got {q}")))
    }
}

/// `(a; q)_order`. Negative finite orders use `(a;q)_{-m} = 1/(a q^{-m}; q)_m`.
pub fn q_pochhammer(a: f64, q: f64, order: QOrder) -> Result<f64> {
    check_q(q)?;
    match order {
        QOrder::Finite(m) if m >= 0 => {
            let mut acc = 1.0;
            let mut qk = 1.0;
            for _ in 0..m {
                acc *= 1.0 - a * qk;
                qk *= q;
            }
            Ok(acc)
        }
        QOrder::Finite(m) => {
            let shifted = a * q.powi(m as i32);
            let den = q_pochhammer(shifted, q, QOrder::Finite(-m))?;
            if den == 0.0 {
                return Err(ClosedFormError::Pole { arg: a, context: format!("(a;q)_{m}") });
            }
            Ok(1.0 / den)
        }
        QOrder::Infinite => Ok(q_pochhammer_log_inf(a, q)?.map_or(0.0, |(l, s)| s * l.exp())),
    }
}

/// `log|(a;q)_inf|` and its sign, or `None` when the product vanishes.
fn q_pochhammer_log_inf(a: f64, q: f64) -> Result<Option<(f64, f64)>> {
    let mut log = 0.0;
    let mut sign = 1.0;
    let mut term = a;
    loop {
        if 2.0 * term.abs() / (1.0 - q) < Q_TAIL_TOL {
            break;
        }
        let f = 1.0 - term;
        if f == 0.0 {
            return Ok(None);
        }
        if f < 0.0 {
            sign = -sign;
        }
        log += f.abs().ln();
        term *= q;
    }
    Ok(Some((log, sign)))
}

/// `Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^{1-x}` as a signed log value.
pub fn q_gamma_value(x: f64, q: f64) -> Result<G> {
    check_q(q)?;
    let (ln, sn) = q_pochhammer_log_inf(q, q)?.expect("(q;q) is nonzero");
    let Some((ld, sd)) = q_pochhammer_log_inf(q.powf(x), q)? else {
        return Err(ClosedFormError::Pole { arg: x, context: "q-gamma".into() });
    };
    Ok(G { log_abs: ln - ld + (1.0 - x) * (1.0 - q).ln(), sign: (sn * sd) as i8 })
}

pub fn q_gamma(x: f64, q: f64) -> Result<f64> {
    Ok(q_gamma_value(x, q)?.value())
}

/// Askey's q-Selberg product
/// `q^{alpha k C(n,2) + 2 k^2 C(n,3)} prod_j Gq(alpha+jk) Gq(beta+jk) Gq(1+(j+1)k) / (Gq(alpha+beta+(n+j-1)k) Gq(1+k))`.
pub fn q_selberg_rhs(n: usize, alpha: f64, beta: f64, k: u32, q: f64) -> Result<G> {
    if alpha <= 0.0 {
        return Err(ClosedFormError::Domain(format!("need alpha > 0, got {alpha}")));
    }
    let kf = f64::from(k);
    let nf = n as f64;
    let c2 = nf * (nf - 1.0) / 2.0;
    let c3 = nf * (nf - 1.0) * (nf - 2.0) / 6.0;
    let mut v = G::from_log((alpha * kf * c2 + 2.0 * kf * kf * c3) * q.ln());
    for j in 0..n {
        let jk = j as f64 * kf;
        v = v
            .mul(q_gamma_value(alpha + jk, q)?)
            .mul(q_gamma_value(beta + jk, q)?)
            .mul(q_gamma_value(1.0 + (j as f64 + 1.0) * kf, q)?)
            .div(q_gamma_value(alpha + beta + (nf + j as f64 - 1.0) * kf, q)?)
            .div(q_gamma_value(1.0 + kf, q)?);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_gamma_small_values() {
        assert!((q_gamma(1.0, 0.5).unwrap() - 1.0).abs() < 1e-14);
        assert!((q_gamma(2.0, 0.5).unwrap() - 1.0).abs() < 1e-14);
        assert!((q_gamma(3.0, 0.5).unwrap() - 1.5).abs() < 1e-14);
        assert!((q_gamma(5.0, 0.999).unwrap() - 24.0).abs() < 1e-2 * 24.0);
        assert!(q_gamma(1.0, 1.0).is_err());
        assert!(q_gamma(0.0, 0.5).is_err());
    }

    #[test]
    fn pochhammer_orders() {
        let q = 0.3;
        let a = 0.7;
        let finite = q_pochhammer(a, q, QOrder::Finite(3)).unwrap();
        assert!((finite - (1.0 - a) * (1.0 - a * q) * (1.0 - a * q * q)).abs() < 1e-15);
        let neg = q_pochhammer(a, q, QOrder::Finite(-2)).unwrap();
        assert!((neg * (1.0 - a / q) * (1.0 - a / (q * q)) - 1.0).abs() < 1e-13);
        let inf = q_pochhammer(a, q, QOrder::Infinite).unwrap();
        let tail = q_pochhammer(a * q.powi(3), q, QOrder::Infinite).unwrap();
        assert!((inf - finite * tail).abs() < 1e-14);
    }

    #[test]
    fn q_selberg_known_value() {
        let v = q_selberg_rhs(2, 1.0, 1.0, 1, 0.5).unwrap().value();
        assert!((v - 4.0 / 21.0).abs() < 1e-14);
    }
}
