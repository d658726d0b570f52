//! Quadrature cross-checks that compare two numerical sides of an identity.

use std::f64::consts::PI;

use selberg_algebra::{from_f64, to_f64, LaurentPoly, Rational};
use selberg_closed_forms::gamma::sin_pi;
use selberg_jack::{jack_eval, JackParams, Partition};
use selberg_par::Exec;

use crate::error::{NumericError, Result};
use crate::poly::DensePoly;
use crate::quad::{quad_integrate_with, DensitySpec};
use crate::tanh_sinh::{refine, Pt};

fn exact(x: f64, what: &str) -> Result<Rational> {
    from_f64(x).ok_or_else(|| NumericError::Domain(format!("{what} = {x} is not finite")))
}

/// Relative gap between the two-variable interlacing integral for `P_(l)` and the exact
/// Jack polynomial at `x`.
pub fn okounkov_olshanski_check(lambda: &Partition, gamma: f64, x: [f64; 2], rel_tol: f64) -> Result<f64> {
    let spec = DensitySpec::OkounkovOlshanski { lambda: lambda.clone(), gamma, x };
    let quad = quad_integrate_with(Exec::available(), &spec, rel_tol)?;
    let params = JackParams::new(exact(gamma, "gamma")?, 2)?;
    let point = [exact(x[0], "x_1")?, exact(x[1], "x_2")?];
    let want = to_f64(&jack_eval(lambda, &params, &point)?);
    Ok((quad.value - want).abs() / want.abs())
}

/// Both sides of the circle/box transfer identity for a Laurent polynomial `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SiCheck {
    /// `int_{[0,1]^n} prod t^{zeta-1} f(t) dt`.
    pub lhs: f64,
    /// `(2 sin pi zeta)^{-n} int_{[-pi,pi]^n} e^{i zeta sum theta} f(-e^{i theta}) d theta`, real part.
    pub rhs: f64,
    pub residual: f64,
}

/// Evaluates both sides by quadrature. `zeta` must make the box integral converge and
/// must not be an integer, where the sine prefactor is singular.
pub fn si_identity_check(f: &LaurentPoly, zeta: f64, rel_tol: f64) -> Result<SiCheck> {
    if f.has_q() {
        return Err(NumericError::Domain("si identity check needs a q-free polynomial".into()));
    }
    let p = DensePoly::from_laurent(f);
    let n = p.nvars();
    if n == 0 || n > 2 {
        return Err(NumericError::Domain(format!("si identity check supports 1 or 2 variables, got {n}")));
    }
    let sine = sin_pi(zeta);
    if sine.abs() < 1e-12 {
        return Err(NumericError::Domain(format!("zeta = {zeta} is an integer; the sine prefactor is singular")));
    }
    let min_exp = p.terms().iter().flat_map(|(e, _)| e.iter().copied()).min().unwrap_or(0);
    let e_min = zeta + f64::from(min_exp.min(0));
    if e_min <= 0.0 {
        return Err(NumericError::Domain(format!("box integral diverges: endpoint exponent {e_min}")));
    }
    let exec = Exec::available();
    let terms = p.terms().to_vec();

    let box_f = |pts: &[Pt]| -> f64 {
        terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(pts).map(|(&k, t)| t.x.powf(zeta - 1.0 + f64::from(k))).product::<f64>())
            .sum()
    };
    let unit = |_: usize, _: &[Pt]| Some((0.0, 1.0));
    let lhs = refine(exec, n, e_min, rel_tol, &unit, &box_f)?.value;

    let circle_f = |pts: &[Pt]| -> f64 {
        let total: f64 = pts.iter().map(|t| t.x).sum();
        terms
            .iter()
            .map(|(e, c)| {
                let shift: f64 = e.iter().zip(pts).map(|(&k, t)| f64::from(k) * t.x).sum();
                let parity = if e.iter().sum::<i32>() % 2 == 0 { 1.0 } else { -1.0 };
                c * parity * (zeta * total + shift).cos()
            })
            .sum()
    };
    let circle = |_: usize, _: &[Pt]| Some((-PI, PI));
    let raw = refine(exec, n, 1.0, rel_tol, &circle, &circle_f)?.value;
    let rhs = raw / (2.0 * sine).powi(n as i32);
    Ok(SiCheck { lhs, rhs, residual: (lhs - rhs).abs() / lhs.abs() })
}
