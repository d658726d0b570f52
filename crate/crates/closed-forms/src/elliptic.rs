//! Theta function, elliptic gamma function and elliptic beta evaluations.

use num_complex::Complex64;

use crate::error::{ClosedFormError, Result};
use crate::qseries::{q_pochhammer, QOrder};

/// Truncation bound for the terms dropped from infinite products.
pub const ELLIPTIC_TAIL_TOL: f64 = 1e-17;

/// Nome pair and balancing parameters for the elliptic beta integrals.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticParams {
    pub p: Complex64,
    pub q: Complex64,
    /// Six parameters `t_1..t_6`.
    pub t_r: Vec<Complex64>,
    /// Interaction parameter of the multivariate integral.
    pub t: Complex64,
}

impl EllipticParams {
    /// Real parameters with `t_6` solved from the balance condition at rank `n`.
    pub fn balanced(p: f64, q: f64, t: f64, first_five: [f64; 5], n: usize) -> Self {
        let prod: f64 = first_five.iter().product();
        let t6 = p * q / (t.powi(2 * n as i32 - 2) * prod);
        let mut t_r: Vec<Complex64> = first_five.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        t_r.push(Complex64::new(t6, 0.0));
        EllipticParams { p: p.into(), q: q.into(), t_r, t: t.into() }
    }
}

fn check_nome(x: Complex64, name: &str) -> Result<()> {
    if x.norm() < 1.0 {
        Ok(())
    } else {
        Err(ClosedFormError::Domain(format!("need |{name}| < 1, got {}", x.norm())))
    }
}

/// `(a; q)_inf` for complex arguments.
pub fn q_pochhammer_complex(a: Complex64, q: Complex64) -> Result<Complex64> {
    check_nome(q, "q")?;
    let mut acc = Complex64::new(1.0, 0.0);
    let mut term = a;
    while term.norm() / (1.0 - q.norm()) >= ELLIPTIC_TAIL_TOL {
        acc *= 1.0 - term;
        term *= q;
    }
    Ok(acc)
}

/// `theta(z; p) = (z; p)_inf (p/z; p)_inf`.
pub fn theta(z: Complex64, p: Complex64) -> Result<Complex64> {
    check_nome(p, "p")?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(ClosedFormError::Domain("theta needs z != 0".into()));
    }
    Ok(q_pochhammer_complex(z, p)? * q_pochhammer_complex(p / z, p)?)
}

/// `Gamma(z; p, q) = prod_{i,j >= 0} (1 - z^{-1} p^{i+1} q^{j+1}) / (1 - z p^i q^j)`.
pub fn elliptic_gamma(z: Complex64, p: Complex64, q: Complex64) -> Result<Complex64> {
    check_nome(p, "p")?;
    check_nome(q, "q")?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(ClosedFormError::Domain("elliptic gamma needs z != 0".into()));
    }
    let zi = z.inv() * p * q;
    let scale = z.norm().max(zi.norm());
    let geometric = 1.0 / ((1.0 - p.norm()) * (1.0 - q.norm()));
    let mut acc = Complex64::new(1.0, 0.0);
    let mut pi = Complex64::new(1.0, 0.0);
    while scale * pi.norm() * geometric >= ELLIPTIC_TAIL_TOL {
        let mut pq = pi;
        while scale * pq.norm() * geometric >= ELLIPTIC_TAIL_TOL {
            let den = 1.0 - z * pq;
            if den.norm() == 0.0 {
                return Err(ClosedFormError::Pole { arg: z.re, context: "elliptic gamma".into() });
            }
            acc *= (1.0 - zi * pq) / den;
            pq *= q;
        }
        pi *= p;
    }
    Ok(acc)
}

fn check_balance(params: &EllipticParams, n: usize) -> Result<()> {
    check_nome(params.p, "p")?;
    check_nome(params.q, "q")?;
    if params.t_r.len() != 6 {
        return Err(ClosedFormError::Balance(format!("need six t_r, got {}", params.t_r.len())));
    }
    let prod: Complex64 = params.t_r.iter().product::<Complex64>() * params.t.powi(2 * n as i32 - 2);
    let target = params.p * params.q;
    if (prod - target).norm() > 1e-12 * target.norm() {
        return Err(ClosedFormError::Balance(format!("product {prod} differs from pq = {target}")));
    }
    if params.t_r.iter().any(|t| t.norm() >= 1.0) || (n > 1 && params.t.norm() >= 1.0) {
        return Err(ClosedFormError::Domain("need |t_r| < 1 and |t| < 1".into()));
    }
    Ok(())
}

fn prefactor(params: &EllipticParams, n: usize) -> Result<Complex64> {
    let pp = q_pochhammer_complex(params.p, params.p)?;
    let qq = q_pochhammer_complex(params.q, params.q)?;
    let mut v = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        v *= 2.0 * j as f64 / (pp * qq);
    }
    Ok(v)
}

/// Right-hand side of the elliptic beta integral (rank one) with the `dz/(2 pi i z)` measure.
pub fn spiridonov_rhs(params: &EllipticParams) -> Result<Complex64> {
    check_balance(params, 1)?;
    let mut v = prefactor(params, 1)?;
    for r in 0..6 {
        for s in r + 1..6 {
            v *= elliptic_gamma(params.t_r[r] * params.t_r[s], params.p, params.q)?;
        }
    }
    Ok(v)
}

/// Right-hand side of the elliptic Selberg integral of rank `n`.
pub fn elliptic_beta_rhs(params: &EllipticParams, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Err(ClosedFormError::Domain("n must be positive".into()));
    }
    check_balance(params, n)?;
    let (p, q, t) = (params.p, params.q, params.t);
    let gamma_t = elliptic_gamma(t, p, q)?;
    let mut v = prefactor(params, n)?;
    for j in 1..=n {
        v *= elliptic_gamma(t.powi(j as i32), p, q)? / gamma_t;
        let shift = t.powi(j as i32 - 1);
        for r in 0..6 {
            for s in r + 1..6 {
                v *= elliptic_gamma(shift * params.t_r[r] * params.t_r[s], p, q)?;
            }
        }
    }
    Ok(v)
}

/// Askey-Wilson product `2 (t1 t2 t3 t4; q)_inf / ((q;q)_inf prod_{r<s} (t_r t_s; q)_inf)`.
pub fn askey_wilson_rhs(t: [f64; 4], q: f64) -> Result<f64> {
    let all: f64 = t.iter().product();
    let mut v = 2.0 * q_pochhammer(all, q, QOrder::Infinite)? / q_pochhammer(q, q, QOrder::Infinite)?;
    for r in 0..4 {
        for s in r + 1..4 {
            v /= q_pochhammer(t[r] * t[s], q, QOrder::Infinite)?;
        }
    }
    Ok(v)
}
