//! Exact combinatorial counterparts of the Selberg integral at integer parameters.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selberg_algebra::{factorial, BigInt, Rational};
use selberg_par::{batch_seed, map_indexed, Exec};

use crate::error::{NumericError, Result};

/// Default ceiling on the `n!^{2k-1}` permutation terms of the hyperdeterminant.
pub const HYPERDET_TERM_CEILING: u128 = 50_000_000;
/// Ceiling on memoized states in the exhaustive Stanley count.
pub const STANLEY_STATE_CEILING: u128 = 4_000_000;

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `B(alpha + j, beta)` for positive integers.
fn beta_moment(alpha: u64, beta: u64, j: u64) -> Rational {
    fact(alpha + j - 1) * fact(beta - 1) / fact(alpha + beta + j - 1)
}

/// Exact `S_n(alpha, beta, k)` for positive integer `alpha`, `beta` and nonnegative integer `k`.
pub fn selberg_exact(n: u64, alpha: u64, beta: u64, k: u64) -> Result<Rational> {
    if alpha == 0 || beta == 0 {
        return Err(NumericError::Domain("alpha and beta must be positive integers".into()));
    }
    let mut v = Rational::one();
    for j in 0..n {
        v *= fact(alpha + j * k - 1) * fact(beta + j * k - 1) * fact((j + 1) * k);
        v /= fact(alpha + beta + (n + j - 1) * k - 1) * fact(k);
    }
    Ok(v)
}

fn sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// Cayley hyperdeterminant of order `2k` of the Hankel tensor `mu_{i_1 + .. + i_{2k}}`
/// with Beta moments, using `(n!)^{2k-2}` ordinary determinants for the innermost sum.
pub fn hankel_hyperdet(n: usize, k: usize, alpha: u64, beta: u64) -> Result<Rational> {
    hankel_hyperdet_with_ceiling(n, k, alpha, beta, HYPERDET_TERM_CEILING)
}

pub fn hankel_hyperdet_with_ceiling(n: usize, k: usize, alpha: u64, beta: u64, ceiling: u128) -> Result<Rational> {
    if k == 0 || n == 0 || alpha == 0 || beta == 0 {
        return Err(NumericError::Domain("need n, k, alpha, beta >= 1".into()));
    }
    let nf = (1..=n as u128).product::<u128>();
    let terms = (0..2 * k - 1).try_fold(1u128, |acc, _| acc.checked_mul(nf));
    match terms {
        Some(t) if t <= ceiling => {}
        _ => return Err(NumericError::Size(format!("{n}!^{} hyperdeterminant terms", 2 * k - 1))),
    }
    let max_index = 2 * k * (n - 1);
    let mu: Vec<Rational> = (0..=max_index as u64).map(|j| beta_moment(alpha, beta, j)).collect();
    let perms: Vec<(Vec<usize>, i32)> = (0..n).permutations(n).map(|p| {
        let s = sign(&p);
        (p, s)
    }).collect();
    let mut total = Rational::zero();
    // all but the last permutation are enumerated; the last one is a determinant
    let outer = 2 * k - 2;
    let mut choice = vec![0usize; outer];
    loop {
        let mut offset: Vec<usize> = (0..n).collect();
        let mut s = 1;
        for &c in &choice {
            let (p, sg) = &perms[c];
            s *= sg;
            for i in 0..n {
                offset[i] += p[i];
            }
        }
        let m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| mu[offset[i] + j].clone()).collect()).collect();
        let d = rational_det(m);
        if s > 0 {
            total += d;
        } else {
            total -= d;
        }
        // odometer over the outer permutations
        let mut pos = 0;
        loop {
            if pos == outer {
                return Ok(total);
            }
            choice[pos] += 1;
            if choice[pos] < perms.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// How to evaluate the Stanley placement probability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StanleyMode {
    Exhaustive,
    Mc { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct StanleyEstimate {
    pub probability: f64,
    /// Binomial standard error; zero in exhaustive mode.
    pub std_err: f64,
    /// Exact value from exhaustive enumeration.
    pub exact: Option<Rational>,
}

/// A non-`t` label together with the allowed number of `t` points to its left.
#[derive(Clone, Copy, Debug)]
struct Label {
    count: u32,
    lo: u32,
    hi: u32,
}

fn labels(n: u32, alpha: u32, beta: u32, two_gamma: u32) -> Vec<Label> {
    let mut out = Vec::new();
    for p in 1..=n {
        out.push(Label { count: alpha - 1, lo: 0, hi: p - 1 });
        out.push(Label { count: beta - 1, lo: p, hi: n });
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Label { count: two_gamma, lo: i, hi: j - 1 });
        }
    }
    out.retain(|l| l.count > 0);
    out
}

struct Counter<'a> {
    n: u32,
    labels: &'a [Label],
    memo: HashMap<Vec<u32>, BigInt>,
}

impl Counter<'_> {
    /// Valid completions; `rem[0]` is the number of `t` points still to place.
    fn count(&mut self, rem: &mut Vec<u32>) -> BigInt {
        if rem.iter().all(|&r| r == 0) {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(rem.as_slice()) {
            return v.clone();
        }
        let placed = self.n - rem[0];
        let mut total = BigInt::zero();
        if rem[0] > 0 {
            rem[0] -= 1;
            total += self.count(rem);
            rem[0] += 1;
        }
        for s in 0..self.labels.len() {
            let l = self.labels[s];
            if rem[s + 1] > 0 && l.lo <= placed && placed <= l.hi {
                rem[s + 1] -= 1;
                total += self.count(rem);
                rem[s + 1] += 1;
            }
        }
        self.memo.insert(rem.clone(), total.clone());
        total
    }
}

/// Probability that uniformly placed labelled points satisfy the Selberg placement rule:
/// `alpha - 1` points `y_p` left of the `p`-th smallest `t`, `beta - 1` points `z_p` right
/// of it, and `2 gamma` points `a_ij` between the `i`-th and `j`-th `t`.
pub fn stanley_probability(n: u32, alpha: u32, beta: u32, two_gamma: u32, mode: StanleyMode) -> Result<StanleyEstimate> {
    stanley_probability_with(Exec::available(), n, alpha, beta, two_gamma, mode)
}

pub fn stanley_probability_with(
    exec: Exec,
    n: u32,
    alpha: u32,
    beta: u32,
    two_gamma: u32,
    mode: StanleyMode,
) -> Result<StanleyEstimate> {
    if n == 0 || alpha == 0 || beta == 0 || two_gamma == 0 {
        return Err(NumericError::Domain("n, alpha, beta and 2 gamma must be positive".into()));
    }
    let labels = labels(n, alpha, beta, two_gamma);
    match mode {
        StanleyMode::Exhaustive => {
            let states = labels.iter().fold(u128::from(n) + 1, |acc, l| acc.saturating_mul(u128::from(l.count) + 1));
            if states > STANLEY_STATE_CEILING {
                return Err(NumericError::Size(format!("{states} enumeration states")));
            }
            let mut rem: Vec<u32> = std::iter::once(n).chain(labels.iter().map(|l| l.count)).collect();
            let total_points: u64 = rem.iter().map(|&r| u64::from(r)).sum();
            let mut words = factorial(total_points);
            for &r in &rem {
                words /= factorial(u64::from(r));
            }
            let mut counter = Counter { n, labels: &labels, memo: HashMap::new() };
            let valid = counter.count(&mut rem);
            let exact = Rational::new(valid, words);
            Ok(StanleyEstimate { probability: selberg_algebra::to_f64(&exact), std_err: 0.0, exact: Some(exact) })
        }
        StanleyMode::Mc { samples, seed } => {
            if samples == 0 {
                return Err(NumericError::Domain("need at least one sample".into()));
            }
            const BATCH: u64 = 1 << 14;
            let batches = samples.div_ceil(BATCH);
            let hits: u64 = map_indexed(exec, batches as usize, |b| {
                let count = BATCH.min(samples - b as u64 * BATCH);
                let mut rng = ChaCha8Rng::seed_from_u64(batch_seed(seed, b as u64));
                let mut t = vec![0.0f64; n as usize];
                let mut hits = 0u64;
                for _ in 0..count {
                    for v in t.iter_mut() {
                        *v = rng.random::<f64>();
                    }
                    t.sort_by(f64::total_cmp);
                    let ok = labels.iter().all(|l| {
                        let lo = if l.lo == 0 { 0.0 } else { t[l.lo as usize - 1] };
                        let hi = if l.hi == n { 1.0 } else { t[l.hi as usize] };
                        (0..l.count).all(|_| {
                            let u = rng.random::<f64>();
                            lo < u && u < hi
                        })
                    });
                    hits += u64::from(ok);
                }
                hits
            })
            .into_iter()
            .sum();
            let p = hits as f64 / samples as f64;
            Ok(StanleyEstimate { probability: p, std_err: (p * (1.0 - p) / samples as f64).sqrt(), exact: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use selberg_algebra::rat;

    #[test]
    fn determinant_of_hilbert_block() {
        let m = vec![vec![rat(1, 1), rat(1, 2)], vec![rat(1, 2), rat(1, 3)]];
        assert_eq!(rational_det(m), rat(1, 12));
    }

    #[test]
    fn selberg_exact_small() {
        assert_eq!(selberg_exact(2, 1, 1, 1).unwrap(), rat(1, 6));
        assert_eq!(selberg_exact(1, 2, 2, 5).unwrap(), rat(1, 6));
    }
}
