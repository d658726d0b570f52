use nalgebra::{DMatrix, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::dirichlet::{dirichlet_with, gamma_variate};
use crate::error::{EnsembleError, Result};
use crate::roots::find_root;
use crate::sample::{EnsembleSample, Family, RandomRecurrenceState};

/// Zeros of the current polynomial of degree `j`, given the sorted zeros of its predecessor
/// and outer limits. Between consecutive brackets the monic polynomial alternates sign.
fn interlaced_zeros(state: &RandomRecurrenceState, prev: &[f64], lo: f64, hi: f64) -> Result<Vec<f64>> {
    let j = state.step();
    let mut edges = Vec::with_capacity(j + 1);
    edges.push(lo);
    edges.extend_from_slice(prev);
    edges.push(hi);
    let mut out = Vec::with_capacity(j);
    for (k, p) in edges.windows(2).enumerate() {
        let rising = (j - 1 - k).is_multiple_of(2);
        out.push(find_root(|x| state.eval(x), p[0], p[1], rising)?);
    }
    Ok(out)
}

fn check_selberg(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<()> {
    if n == 0 {
        return Err(EnsembleError::Domain("n must be at least 1".into()));
    }
    if !(alpha > 0.0 && beta > 0.0 && alpha.is_finite() && beta.is_finite()) {
        return Err(EnsembleError::Domain(format!("need alpha, beta > 0, got {alpha}, {beta}")));
    }
    if !(gamma > 0.0 && gamma.is_finite()) && !(n == 1 && gamma == 0.0) {
        return Err(EnsembleError::Domain(format!("need gamma > 0, got {gamma}")));
    }
    Ok(())
}

/// Runs the Jacobi-type recurrence with step weights from `weights(j)` and returns the
/// zeros of `A_n`.
fn jacobi_recurrence(n: usize, mut weights: impl FnMut(usize) -> Result<[f64; 3]>) -> Result<Vec<f64>> {
    let mut state = RandomRecurrenceState::new();
    let mut zeros: Vec<f64> = Vec::new();
    for j in 1..=n {
        let [w0, w1, w2] = weights(j)?;
        state.advance_jacobi(w0, w1, w2);
        zeros = interlaced_zeros(&state, &zeros, 0.0, 1.0)?;
    }
    for &t in &zeros {
        if !(t > 0.0 && t < 1.0) {
            return Err(EnsembleError::Root { root: t, lo: 0.0, hi: 1.0 });
        }
    }
    Ok(zeros)
}

/// One draw from the Selberg density `prod t^{alpha-1} (1-t)^{beta-1} |Delta|^{2 gamma}`
/// as the zeros of a random three-term recurrence with Dirichlet step weights.
pub fn selberg_density_sample(n: usize, alpha: f64, beta: f64, gamma: f64, seed: u64) -> Result<EnsembleSample> {
    check_selberg(n, alpha, beta, gamma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zeros = jacobi_recurrence(n, |j| {
        let rest = (n - j) as f64 * gamma;
        // (j-1) gamma = 0 at the first step: that weight is zero and the other two are Beta
        let w = dirichlet_with(&mut rng, &[rest + beta, (j - 1) as f64 * gamma, rest + alpha])?;
        Ok([w[0], w[1], w[2]])
    })?;
    Ok(EnsembleSample::new(zeros, Family::Selberg { n, alpha, beta, gamma }, seed))
}

/// The recurrence with every Dirichlet draw replaced by its large-`gamma` mean,
/// weights proportional to `(n - j + beta, j - 1, n - j + alpha)`. Its zeros are the
/// minimum-energy configuration, the zeros of the Jacobi polynomial with weight
/// `t^{alpha-1} (1-t)^{beta-1}`.
pub fn crystallized_roots(n: usize, alpha: f64, beta: f64) -> Result<Vec<f64>> {
    check_selberg(n, alpha, beta, 1.0)?;
    let mut zeros = jacobi_recurrence(n, |j| {
        let rest = (n - j) as f64;
        let w = [rest + beta, (j - 1) as f64, rest + alpha];
        let total: f64 = w.iter().sum();
        Ok([w[0] / total, w[1] / total, w[2] / total])
    })?;
    zeros.sort_by(f64::total_cmp);
    Ok(zeros)
}

/// Zeros of the degree-`n` orthogonal polynomial for the weight `t^{alpha-1} (1-t)^{beta-1}`
/// on `(0, 1)`, from the eigenvalues of its Jacobi matrix.
pub fn jacobi_zeros(n: usize, alpha: f64, beta: f64) -> Result<Vec<f64>> {
    if n == 0 || !(alpha > 0.0 && beta > 0.0) {
        return Err(EnsembleError::Domain(format!("need n >= 1 and alpha, beta > 0; got {n}, {alpha}, {beta}")));
    }
    // P^{(a, b)} on [-1, 1] with t = (1 - y) / 2
    let (a, b) = (alpha - 1.0, beta - 1.0);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        m[(k, k)] = if k == 0 { (b - a) / (a + b + 2.0) } else { (b * b - a * a) / (s * (s + 2.0)) };
        if k + 1 < n {
            let k1 = kf + 1.0;
            let s1 = 2.0 * k1 + a + b;
            let off2 = if k == 0 {
                // (k1 + a + b) / (s1 - 1) is 0/0 at a + b = -1
                4.0 * (1.0 + a) * (1.0 + b) / (s1 * s1 * (s1 + 1.0))
            } else {
                4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + a + b) / (s1 * s1 * (s1 + 1.0) * (s1 - 1.0))
            };
            let off = off2.sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let mut t: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().map(|y| (1.0 - y) / 2.0).collect();
    t.sort_by(f64::total_cmp);
    Ok(t)
}

/// How to draw a Gaussian beta ensemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteMethod {
    /// Zeros of `C_j = (x - r) C_{j-1} - s^{(j-1)} C_{j-2}`.
    Recurrence,
    /// Eigenvalues of the symmetric tridiagonal matrix with the same entry laws.
    Tridiagonal,
}

/// Gaussian ensemble with density `prod e^{-t^2/2} |Delta|^{2 gamma}`: diagonal entries
/// standard normal, squared off-diagonals `Gamma(j gamma, 1)` for `j = 1..n-1`.
pub fn hermite_beta_sample(n: usize, gamma: f64, method: HermiteMethod, seed: u64) -> Result<EnsembleSample> {
    if n == 0 || !(gamma > 0.0 && gamma.is_finite()) {
        return Err(EnsembleError::Domain(format!("need n >= 1 and gamma > 0; got {n}, {gamma}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut diag = Vec::with_capacity(n);
    let mut off2 = Vec::with_capacity(n);
    for j in 1..=n {
        diag.push(StandardNormal.sample(&mut rng));
        off2.push(if j == 1 { 0.0 } else { gamma_variate(&mut rng, (j - 1) as f64 * gamma)? });
    }
    let points = match method {
        HermiteMethod::Recurrence => {
            let mut state = RandomRecurrenceState::new();
            let mut zeros: Vec<f64> = Vec::new();
            let mut radius = 0.0f64;
            for j in 0..n {
                state.advance_hermite(diag[j], off2[j]);
                let b = off2[j].sqrt() + off2.get(j + 1).map_or(0.0, |s| s.sqrt());
                radius = radius.max(diag[j].abs() + 2.0 * b);
                let reach = radius + 1.0;
                zeros = interlaced_zeros(&state, &zeros, -reach, reach)?;
            }
            zeros
        }
        HermiteMethod::Tridiagonal => {
            let mut m = DMatrix::<f64>::zeros(n, n);
            for j in 0..n {
                m[(j, j)] = diag[j];
                if j > 0 {
                    let b = off2[j].sqrt();
                    m[(j, j - 1)] = b;
                    m[(j - 1, j)] = b;
                }
            }
            SymmetricEigen::new(m).eigenvalues.iter().copied().collect()
        }
    };
    Ok(EnsembleSample::new(points, Family::Hermite { n, gamma }, seed))
}
