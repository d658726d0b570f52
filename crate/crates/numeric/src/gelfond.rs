//! Constrained minimum of `prod (1 + y_i)` behind the Gelfond-type transcendence bound.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{NumericError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct GelfondMin {
    /// Smallest value of `prod (1 + y_i)` found.
    pub value: f64,
    /// The `y` at which it is attained, increasing.
    pub minimizer: Vec<f64>,
    /// `(1 + e^{1/n - 1})^n`.
    pub lower_bound: f64,
    /// Restarts whose descent reached a feasible stationary point.
    pub converged: usize,
}

impl GelfondMin {
    pub fn exceeds_bound(&self) -> bool {
        self.value > self.lower_bound
    }
}

fn objective(x: &[f64]) -> f64 {
    x.iter().map(|&v| v.exp().ln_1p()).sum()
}

/// Constraint values `(sum x - (1 - n), sum_{i<j} ln|e^{-x_i} - e^{-x_j}|)` and their Jacobian.
fn constraints(x: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
    let n = x.len();
    let rows = if n > 1 { 2 } else { 1 };
    let mut c = DVector::zeros(rows);
    let mut jac = DMatrix::zeros(rows, n);
    c[0] = x.iter().sum::<f64>() - (1.0 - n as f64);
    for k in 0..n {
        jac[(0, k)] = 1.0;
    }
    if n > 1 {
        let e: Vec<f64> = x.iter().map(|v| (-v).exp()).collect();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let d = e[i] - e[j];
                if i < j {
                    c[1] += d.abs().ln();
                }
                jac[(1, i)] -= e[i] / d;
            }
        }
    }
    (c, jac)
}

/// Newton steps along `J^T (J J^T)^{-1} c` back onto the constraint manifold.
fn project(x: &mut [f64]) -> bool {
    for _ in 0..60 {
        let (c, jac) = constraints(x);
        if !c.iter().all(|v| v.is_finite()) {
            return false;
        }
        if c.norm() < 1e-13 {
            return true;
        }
        let gram = &jac * jac.transpose();
        let Some(lam) = gram.lu().solve(&c) else { return false };
        let step = jac.transpose() * lam;
        for (v, s) in x.iter_mut().zip(step.iter()) {
            *v -= s;
        }
    }
    false
}

fn tangent_gradient(x: &[f64]) -> Option<DVector<f64>> {
    let g = DVector::from_iterator(x.len(), x.iter().map(|&v| 1.0 / (1.0 + (-v).exp())));
    let (_, jac) = constraints(x);
    let gram = &jac * jac.transpose();
    let lam = gram.lu().solve(&(&jac * &g))?;
    Some(g - jac.transpose() * lam)
}

fn descend(mut x: Vec<f64>) -> Option<Vec<f64>> {
    if !project(&mut x) {
        return None;
    }
    let mut f = objective(&x);
    let mut step = 0.5;
    for _ in 0..5000 {
        let g = tangent_gradient(&x)?;
        if g.norm() < 1e-11 {
            break;
        }
        let mut moved = false;
        while step > 1e-15 {
            let mut trial: Vec<f64> = x.iter().zip(g.iter()).map(|(v, d)| v - step * d).collect();
            if project(&mut trial) {
                let ft = objective(&trial);
                if ft < f {
                    x = trial;
                    f = ft;
                    step *= 1.5;
                    moved = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !moved {
            break;
        }
    }
    Some(x)
}

/// Multi-start projected descent in the variables `x_i = ln y_i`.
pub fn gelfond_min(n: usize, restarts: usize, seed: u64) -> Result<GelfondMin> {
    if n == 0 {
        return Err(NumericError::Domain("n must be positive".into()));
    }
    let nf = n as f64;
    let lower_bound = (1.0 + (1.0 / nf - 1.0).exp()).powf(nf);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut converged = 0;
    for _ in 0..restarts.max(1) {
        let centre = (1.0 - nf) / nf;
        let mut start: Vec<f64> = (0..n).map(|_| centre + 3.0 * (2.0 * rng.random::<f64>() - 1.0)).collect();
        start.sort_by(f64::total_cmp);
        let Some(x) = descend(start) else { continue };
        converged += 1;
        let f = objective(&x);
        if best.as_ref().is_none_or(|(b, _)| f < *b) {
            best = Some((f, x));
        }
    }
    let (f, x) = best.ok_or(NumericError::Accuracy { value: f64::NAN, err: f64::INFINITY })?;
    let mut y: Vec<f64> = x.iter().map(|v| v.exp()).collect();
    y.sort_by(f64::total_cmp);
    Ok(GelfondMin { value: f.exp(), minimizer: y, lower_bound, converged })
}
