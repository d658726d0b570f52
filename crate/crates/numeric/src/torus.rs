//! Trapezoid rules on the torus `[-pi, pi)^n`.

use std::f64::consts::PI;

use num_complex::Complex64;
use selberg_closed_forms::{elliptic_gamma, theta, EllipticParams};
use selberg_par::{map_indexed, Exec};

use crate::error::{NumericError, Result};
use crate::quad::{IntegrationResult, Method};

/// Relative gap between the `N/2` and `N` grids above which the result carries a warning.
pub const COARSE_GRID_TOL: f64 = 1e-8;

/// Periodic integrands, each normalized as an average over the torus.
#[derive(Clone, Debug, PartialEq)]
pub enum TorusIntegrand {
    /// `prod e^{i theta (a-b)/2} |1 + e^{i theta}|^{a+b} prod |e^{i theta_j} - e^{i theta_k}|^{2 gamma}`, `n <= 2`.
    Morris { n: usize, a: f64, b: f64, gamma: f64 },
    /// `< prod |1 + e^{i theta}|^{2x} >` over the circular ensemble with pair exponent `2 gamma`, `n <= 2`.
    CueMoment { n: usize, x: f64, gamma: f64 },
    /// Rank-one elliptic beta integrand `prod_r Gamma(t_r z^{+-1}) / Gamma(z^{+-2})`.
    EllipticBeta(EllipticParams),
    /// `(x^{+-2}; q)_inf / prod_r (t_r x^{+-1}; q)_inf` at one variable.
    GustafsonN1 { t: [f64; 4], q: f64 },
}

impl TorusIntegrand {
    fn dim(&self) -> usize {
        match self {
            TorusIntegrand::Morris { n, .. } | TorusIntegrand::CueMoment { n, .. } => *n,
            TorusIntegrand::EllipticBeta(_) | TorusIntegrand::GustafsonN1 { .. } => 1,
        }
    }
}

fn circle_factors(theta: &[f64], a: f64, b: f64, gamma: f64) -> Complex64 {
    let mut phase = 0.0;
    let mut modulus = 1.0;
    for &t in theta {
        phase += t * (a - b) / 2.0;
        let c = 2.0 * (t / 2.0).cos().abs();
        if a + b != 0.0 {
            modulus *= c.powf(a + b);
        }
    }
    if gamma != 0.0 {
        for i in 0..theta.len() {
            for j in i + 1..theta.len() {
                modulus *= (2.0 * ((theta[i] - theta[j]) / 2.0).sin().abs()).powf(2.0 * gamma);
            }
        }
    }
    Complex64::from_polar(modulus, phase)
}

fn q_poch(a: Complex64, q: f64) -> Result<Complex64> {
    Ok(selberg_closed_forms::q_pochhammer_complex(a, Complex64::new(q, 0.0))?)
}

type Kernel = Box<dyn Fn(&[f64]) -> Result<Complex64> + Sync + Send>;

fn kernel(integrand: &TorusIntegrand) -> Result<Kernel> {
    match integrand.clone() {
        TorusIntegrand::Morris { n, a, b, gamma } => {
            if n == 0 || n > 2 {
                return Err(NumericError::Domain(format!("torus Morris supports n = 1, 2; got {n}")));
            }
            Ok(Box::new(move |t| Ok(circle_factors(t, a, b, gamma))))
        }
        TorusIntegrand::CueMoment { n, x, gamma } => {
            if n == 0 || n > 2 {
                return Err(NumericError::Domain(format!("torus moments support n = 1, 2; got {n}")));
            }
            Ok(Box::new(move |t| Ok(circle_factors(t, x, x, gamma))))
        }
        TorusIntegrand::EllipticBeta(params) => {
            if params.t_r.len() != 6 || params.t_r.iter().any(|t| t.norm() >= 1.0) {
                return Err(NumericError::Domain("elliptic beta needs six |t_r| < 1".into()));
            }
            let prod: Complex64 = params.t_r.iter().product();
            let pq = params.p * params.q;
            if (prod - pq).norm() > 1e-12 * pq.norm() {
                return Err(NumericError::Domain(format!("unbalanced: prod t_r = {prod}, pq = {pq}")));
            }
            Ok(Box::new(move |t| {
                let z = Complex64::from_polar(1.0, t[0]);
                let (p, q) = (params.p, params.q);
                // 1 / Gamma(z^{+-2}) = theta(z^2; p) theta(z^{-2}; q)
                let mut v = theta(z * z, p)? * theta((z * z).inv(), q)?;
                for &tr in &params.t_r {
                    v *= elliptic_gamma(tr * z, p, q)? * elliptic_gamma(tr / z, p, q)?;
                }
                Ok(v)
            }))
        }
        TorusIntegrand::GustafsonN1 { t, q } => {
            if !(q > 0.0 && q < 1.0) || t.iter().any(|x| x.abs() >= 1.0) {
                return Err(NumericError::Domain("need 0 < q < 1 and |t_r| < 1".into()));
            }
            Ok(Box::new(move |th| {
                let x = Complex64::from_polar(1.0, th[0]);
                let mut v = q_poch(x * x, q)? * q_poch((x * x).inv(), q)?;
                for &tr in &t {
                    v /= q_poch(tr * x, q)? * q_poch(tr / x, q)?;
                }
                Ok(v)
            }))
        }
    }
}

fn grid_mean(exec: Exec, k: &Kernel, dim: usize, grid: usize) -> Result<Complex64> {
    let h = 2.0 * PI / grid as f64;
    let node = |j: usize| -PI + (j as f64 + 0.5) * h;
    let rows = map_indexed(exec, grid, |i| -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pt = vec![node(i); dim];
        if dim == 1 {
            return k(&pt);
        }
        for j in 0..grid {
            pt[1] = node(j);
            acc += k(&pt)?;
        }
        Ok(acc)
    });
    let mut total = Complex64::new(0.0, 0.0);
    for r in rows {
        total += r?;
    }
    Ok(total / (grid as f64).powi(dim as i32))
}

/// Torus average with the default executor.
pub fn torus_quadrature(integrand: &TorusIntegrand, grid: usize) -> Result<IntegrationResult> {
    torus_quadrature_with(Exec::available(), integrand, grid)
}

/// Offset trapezoid rule with `grid` nodes per axis; the error estimate is the gap to
/// the half grid. The nodes avoid `theta = 0, pi`.
pub fn torus_quadrature_with(exec: Exec, integrand: &TorusIntegrand, grid: usize) -> Result<IntegrationResult> {
    if grid < 8 || !grid.is_multiple_of(2) {
        return Err(NumericError::Domain(format!("grid must be even and at least 8, got {grid}")));
    }
    let dim = integrand.dim();
    let k = kernel(integrand)?;
    let full = grid_mean(exec, &k, dim, grid)?;
    let half = grid_mean(exec, &k, dim, grid / 2)?;
    let mut value = full;
    if let TorusIntegrand::CueMoment { n, gamma, .. } = integrand {
        let base = kernel(&TorusIntegrand::Morris { n: *n, a: 0.0, b: 0.0, gamma: *gamma })?;
        let (bf, bh) = (grid_mean(exec, &base, dim, grid)?, grid_mean(exec, &base, dim, grid / 2)?);
        value = full / bf;
        let err = (value - half / bh).norm();
        return Ok(finish(value, err, grid, dim, 2));
    }
    let err = (full - half).norm();
    Ok(finish(value, err, grid, dim, 1))
}

fn finish(value: Complex64, err: f64, grid: usize, dim: usize, passes: u64) -> IntegrationResult {
    let evals = passes * ((grid as u64).pow(dim as u32) + (grid as u64 / 2).pow(dim as u32));
    let mut r = IntegrationResult::real(value.re, err, evals, Method::Torus);
    r.imag = value.im;
    if err > COARSE_GRID_TOL * value.norm() {
        r.warning = Some(format!("grid {grid} too coarse: half-grid gap {err:.3e}"));
    }
    r
}
