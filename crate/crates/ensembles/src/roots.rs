use crate::error::{EnsembleError, Result};
use crate::sample::{EnsembleSample, Family};

/// Which random rational function to solve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RationalShape {
    /// `sum_i w_i / (a_i - x)`: one zero between each pair of adjacent nodes.
    Compact,
    /// `x - mu0 + sum_i w_i / (a_i - x)`: additionally one zero beyond each outer node.
    Gaussian { mu0: f64 },
}

/// Root of a function that is monotone on `(lo, hi)` and changes sign there.
/// `rising` says which way; `f` returns value and derivative. Bisection narrows the
/// bracket, Newton finishes while its iterates stay inside.
pub(crate) fn find_root(f: impl Fn(f64) -> (f64, f64), lo: f64, hi: f64, rising: bool) -> Result<f64> {
    if !(lo < hi) {
        return Err(EnsembleError::Bracket { lo, hi });
    }
    let (lo0, hi0) = (lo, hi);
    let (mut lo, mut hi) = (lo, hi);
    let mut mid = lo + 0.5 * (hi - lo);
    for _ in 0..2200 {
        mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid).0;
        if v == 0.0 {
            return Ok(mid);
        }
        if (v < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-10 * mid.abs() {
            break;
        }
    }
    let mut x = mid;
    for _ in 0..8 {
        let (v, d) = f(x);
        if v == 0.0 || d == 0.0 || !d.is_finite() {
            break;
        }
        if (v < 0.0) == rising {
            lo = x;
        } else {
            hi = x;
        }
        let next = x - v / d;
        if !(next > lo && next < hi) {
            break;
        }
        let done = (next - x).abs() <= 4.0 * f64::EPSILON * x.abs();
        x = next;
        if done {
            break;
        }
    }
    if !(x > lo0 && x < hi0) {
        return Err(EnsembleError::Root { root: x, lo: lo0, hi: hi0 });
    }
    Ok(x)
}

fn rational(nodes: &[f64], w: &[f64], shape: RationalShape, x: f64) -> (f64, f64) {
    let (mut v, mut d) = match shape {
        RationalShape::Compact => (0.0, 0.0),
        RationalShape::Gaussian { mu0 } => (x - mu0, 1.0),
    };
    for (a, wi) in nodes.iter().zip(w) {
        let r = 1.0 / (a - x);
        v += wi * r;
        d += wi * r * r;
    }
    (v, d)
}

/// Zeros of a random rational function with strictly decreasing `nodes` and positive `w`.
/// The function is increasing between poles, so each gap holds exactly one zero.
pub fn rational_roots(nodes: &[f64], w: &[f64], shape: RationalShape) -> Result<EnsembleSample> {
    if nodes.len() != w.len() {
        return Err(EnsembleError::Domain(format!("{} nodes but {} weights", nodes.len(), w.len())));
    }
    if nodes.windows(2).any(|p| !(p[0] > p[1])) || nodes.iter().any(|a| !a.is_finite()) {
        return Err(EnsembleError::Domain("nodes must be finite and strictly decreasing".into()));
    }
    if w.iter().any(|x| !(*x > 0.0 && x.is_finite())) {
        return Err(EnsembleError::Domain("weights must be positive".into()));
    }
    let f = |x: f64| rational(nodes, w, shape, x);
    let mut roots = Vec::with_capacity(nodes.len() + 1);
    for p in nodes.windows(2) {
        roots.push(find_root(f, p[1], p[0], true)?);
    }
    let family = match shape {
        RationalShape::Compact => {
            if nodes.len() < 2 {
                return Err(EnsembleError::Domain("the compact form needs at least two nodes".into()));
            }
            Family::RationalCompact { nodes: nodes.to_vec() }
        }
        RationalShape::Gaussian { mu0 } => {
            if !mu0.is_finite() {
                return Err(EnsembleError::Domain("mu0 must be finite".into()));
            }
            if nodes.is_empty() {
                roots.push(mu0);
            } else {
                let (top, bottom) = (nodes[0], nodes[nodes.len() - 1]);
                let mut reach = 1.0;
                while f(top + reach).0 <= 0.0 {
                    reach *= 2.0;
                    if !reach.is_finite() {
                        return Err(EnsembleError::Bracket { lo: top, hi: f64::INFINITY });
                    }
                }
                roots.push(find_root(f, top, top + reach, true)?);
                reach = 1.0;
                while f(bottom - reach).0 >= 0.0 {
                    reach *= 2.0;
                    if !reach.is_finite() {
                        return Err(EnsembleError::Bracket { lo: f64::NEG_INFINITY, hi: bottom });
                    }
                }
                roots.push(find_root(f, bottom - reach, bottom, true)?);
            }
            Family::RationalGaussian { nodes: nodes.to_vec() }
        }
    };
    Ok(EnsembleSample::new(roots, family, 0))
}
