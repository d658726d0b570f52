use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{EnsembleError, Result};

pub(crate) fn gamma_variate<R: Rng>(rng: &mut R, shape: f64) -> Result<f64> {
    let g = Gamma::new(shape, 1.0).map_err(|e| EnsembleError::Domain(format!("Gamma({shape}): {e}")))?;
    Ok(g.sample(rng))
}

/// Dirichlet draw from normalized Gamma variates. A zero shape gives a zero weight.
pub(crate) fn dirichlet_with<R: Rng>(rng: &mut R, s: &[f64]) -> Result<Vec<f64>> {
    let mut w = Vec::with_capacity(s.len());
    for &shape in s {
        w.push(if shape == 0.0 { 0.0 } else { gamma_variate(rng, shape)? });
    }
    let total: f64 = w.iter().sum();
    if !(total > 0.0) {
        return Err(EnsembleError::Domain(format!("all Gamma variates underflowed for shapes {s:?}")));
    }
    for x in &mut w {
        *x /= total;
    }
    Ok(w)
}

/// One draw from `D[s_1, .., s_k]`: nonnegative weights summing to one.
pub fn dirichlet_sample(s: &[f64], seed: u64) -> Result<Vec<f64>> {
    if s.is_empty() || s.iter().any(|x| !(*x > 0.0 && x.is_finite())) {
        return Err(EnsembleError::Domain(format!("Dirichlet shapes must be positive, got {s:?}")));
    }
    dirichlet_with(&mut ChaCha8Rng::seed_from_u64(seed), s)
}
