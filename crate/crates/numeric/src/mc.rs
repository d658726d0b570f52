//! Importance-sampled Monte Carlo with per-batch seeded streams.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Gamma, StandardNormal};
use selberg_closed_forms::{euler_2f1_prefactor, log_gamma};
use selberg_par::{batch_seed, map_indexed, Exec};

use crate::error::{NumericError, Result};
use crate::poly::DensePoly;
use crate::quad::{DensitySpec, IntegrationResult, Method};

const BATCH: u64 = 1 << 14;
/// Weight kurtosis above which the estimate is flagged as unreliable.
pub const KURTOSIS_GUARD: f64 = 100.0;

#[derive(Clone, Copy, Default)]
struct Moments {
    count: u64,
    s1: f64,
    s2: f64,
    s3: f64,
    s4: f64,
}

impl Moments {
    fn push(&mut self, w: f64) {
        let w2 = w * w;
        self.count += 1;
        self.s1 += w;
        self.s2 += w2;
        self.s3 += w2 * w;
        self.s4 += w2 * w2;
    }

    fn merge(&mut self, o: &Moments) {
        self.count += o.count;
        self.s1 += o.s1;
        self.s2 += o.s2;
        self.s3 += o.s3;
        self.s4 += o.s4;
    }

    fn mean_stderr_kurtosis(&self) -> (f64, f64, f64) {
        let n = self.count as f64;
        let m = self.s1 / n;
        let var = (self.s2 / n - m * m).max(0.0);
        let c4 = self.s4 / n - 4.0 * m * self.s3 / n + 6.0 * m * m * self.s2 / n - 3.0 * m.powi(4);
        let kurt = if var > 0.0 { c4 / (var * var) } else { 0.0 };
        let sample_var = var * n / (n - 1.0).max(1.0);
        (m, (sample_var / n).sqrt(), kurt)
    }
}

fn vandermonde_abs(t: &[f64]) -> f64 {
    let mut v = 1.0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            v *= (t[i] - t[j]).abs();
        }
    }
    v
}

fn pow(base: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        base.powf(e)
    }
}

fn log_beta(a: f64, b: f64) -> Result<f64> {
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}

fn beta_dist(a: f64, b: f64) -> Result<Beta<f64>> {
    Beta::new(a, b).map_err(|e| NumericError::Domain(format!("Beta({a}, {b}): {e}")))
}

fn gamma_dist(shape: f64) -> Result<Gamma<f64>> {
    Gamma::new(shape, 1.0).map_err(|e| NumericError::Domain(format!("Gamma({shape}): {e}")))
}

/// A proposal sampler and the importance weight of each draw.
struct Plan {
    dim: usize,
    /// `log` of the constant multiplying the mean weight.
    log_scale: f64,
    draw: Box<dyn Fn(&mut ChaCha8Rng, &mut [f64]) -> f64 + Sync + Send>,
}

fn selberg_like(
    n: usize,
    alpha: f64,
    beta: f64,
    gamma: f64,
    extra: impl Fn(&[f64]) -> f64 + Sync + Send + 'static,
) -> Result<Plan> {
    let d = beta_dist(alpha, beta)?;
    Ok(Plan {
        dim: n,
        log_scale: n as f64 * log_beta(alpha, beta)?,
        draw: Box::new(move |rng, t| {
            for v in t.iter_mut() {
                *v = d.sample(rng);
            }
            pow(vandermonde_abs(t), 2.0 * gamma) * extra(t)
        }),
    })
}

fn plan(spec: &DensitySpec) -> Result<Plan> {
    let unsupported = || NumericError::Unsupported { method: "mc_integrate", family: spec.family() };
    match spec.clone() {
        DensitySpec::Selberg { n, alpha, beta, gamma } => selberg_like(n, alpha, beta, gamma, |_| 1.0),
        DensitySpec::Kadell { n, alpha, beta, gamma, lambda } => {
            let p = DensePoly::jack(&lambda, n, gamma)?;
            selberg_like(n, alpha, beta, gamma, move |t| p.eval(t))
        }
        DensitySpec::HuaKadell { n, alpha, gamma, lambda, mu } => {
            let pl = DensePoly::jack(&lambda, n, gamma)?;
            let pm = DensePoly::jack(&mu, n, gamma)?;
            selberg_like(n, alpha, gamma, gamma, move |t| pl.eval(t) * pm.eval(t))
        }
        DensitySpec::Euler2F1 { n, a, b, c, gamma, z } => {
            let nf = n as f64;
            let alpha = b - (nf - 1.0) * gamma;
            let beta = c - b - (nf - 1.0) * gamma;
            let mut p = selberg_like(n, alpha, beta, gamma, move |t| t.iter().map(|&x| pow(1.0 - z * x, -a)).product())?;
            let pref = euler_2f1_prefactor(n, b, c, gamma)?;
            if pref.value() <= 0.0 {
                return Err(unsupported());
            }
            p.log_scale += pref.log_abs;
            Ok(p)
        }
        DensitySpec::Mehta { n, gamma } => Ok(Plan {
            dim: n,
            log_scale: 0.0,
            draw: Box::new(move |rng, t| {
                for v in t.iter_mut() {
                    *v = rng.sample(StandardNormal);
                }
                pow(vandermonde_abs(t), 2.0 * gamma)
            }),
        }),
        DensitySpec::Laguerre { n, alpha, gamma } => {
            let d = gamma_dist(alpha)?;
            Ok(Plan {
                dim: n,
                log_scale: n as f64 * log_gamma(alpha)?,
                draw: Box::new(move |rng, t| {
                    for v in t.iter_mut() {
                        *v = d.sample(rng);
                    }
                    pow(vandermonde_abs(t), 2.0 * gamma)
                }),
            })
        }
        DensitySpec::AskeyRichards { n, alpha, beta, gamma } => {
            // Dirichlet(alpha, .., alpha, beta) via normalized Gamma variates
            let ga = gamma_dist(alpha)?;
            let gb = gamma_dist(beta)?;
            let log_scale = n as f64 * log_gamma(alpha)? + log_gamma(beta)? - log_gamma(n as f64 * alpha + beta)?;
            Ok(Plan {
                dim: n,
                log_scale,
                draw: Box::new(move |rng, t| {
                    let mut total: f64 = gb.sample(rng);
                    for v in t.iter_mut() {
                        *v = ga.sample(rng);
                        total += *v;
                    }
                    for v in t.iter_mut() {
                        *v /= total;
                    }
                    pow(vandermonde_abs(t), 2.0 * gamma)
                }),
            })
        }
        DensitySpec::Morris { n, a, b, gamma } => Ok(Plan {
            dim: n,
            log_scale: 0.0,
            draw: Box::new(move |rng, t| {
                let mut phase = 0.0;
                let mut v = 1.0;
                for x in t.iter_mut() {
                    *x = PI * (2.0 * rng.random::<f64>() - 1.0);
                    phase += *x;
                    v *= pow(2.0 * (*x / 2.0).cos().abs(), a + b);
                }
                let mut pair = 1.0;
                for i in 0..t.len() {
                    for j in i + 1..t.len() {
                        pair *= 2.0 * ((t[i] - t[j]) / 2.0).sin().abs();
                    }
                }
                v * pow(pair, 2.0 * gamma) * (phase * (a - b) / 2.0).cos()
            }),
        }),
        DensitySpec::DixonAnderson { a, s } => {
            let n = a.len().saturating_sub(1);
            if n == 0 || s.len() != a.len() || a.windows(2).any(|w| w[0] <= w[1]) || s.iter().any(|&v| v <= 0.0) {
                return Err(NumericError::Domain("dixon_anderson needs decreasing nodes and positive exponents".into()));
            }
            // t_i = a_{i+1} + (a_i - a_{i+1}) B, B ~ Beta(s_{i+1}, s_i)
            let mut dists = Vec::with_capacity(n);
            let mut log_scale = 0.0;
            for i in 0..n {
                dists.push(beta_dist(s[i + 1], s[i])?);
                let len = a[i] - a[i + 1];
                log_scale += log_beta(s[i + 1], s[i])? + (s[i] + s[i + 1] - 1.0) * len.ln();
            }
            Ok(Plan {
                dim: n,
                log_scale,
                draw: Box::new(move |rng, t| {
                    for i in 0..n {
                        t[i] = a[i + 1] + (a[i] - a[i + 1]) * dists[i].sample(rng);
                    }
                    let mut v = 1.0;
                    for i in 0..n {
                        for j in i + 1..n {
                            v *= t[i] - t[j];
                        }
                        for (l, (&al, &sl)) in a.iter().zip(&s).enumerate() {
                            if l != i && l != i + 1 {
                                v *= pow((t[i] - al).abs(), sl - 1.0);
                            }
                        }
                    }
                    v
                }),
            })
        }
        DensitySpec::DotsenkoFateev { .. } | DensitySpec::CauchySc { .. } | DensitySpec::OkounkovOlshanski { .. } => {
            Err(unsupported())
        }
    }
}

/// Monte Carlo estimate with the default executor.
pub fn mc_integrate(spec: &DensitySpec, n_samples: u64, seed: u64) -> Result<IntegrationResult> {
    mc_integrate_with(Exec::available(), spec, n_samples, seed)
}

/// Importance sampling from per-variable one-body marginals. The estimate depends only
/// on `(spec, n_samples, seed)`, not on the executor.
pub fn mc_integrate_with(exec: Exec, spec: &DensitySpec, n_samples: u64, seed: u64) -> Result<IntegrationResult> {
    if spec.dim() == 0 || spec.dim() > 6 {
        return Err(NumericError::Domain(format!("mc_integrate supports 1..=6 variables, got {}", spec.dim())));
    }
    if n_samples < 2 {
        return Err(NumericError::Domain("need at least two samples".into()));
    }
    let plan = plan(spec)?;
    let batches = n_samples.div_ceil(BATCH);
    let parts = map_indexed(exec, batches as usize, |b| {
        let count = BATCH.min(n_samples - b as u64 * BATCH);
        let mut rng = ChaCha8Rng::seed_from_u64(batch_seed(seed, b as u64));
        let mut t = vec![0.0; plan.dim];
        let mut m = Moments::default();
        for _ in 0..count {
            m.push((plan.draw)(&mut rng, &mut t));
        }
        m
    });
    let mut total = Moments::default();
    for m in &parts {
        total.merge(m);
    }
    let (mean, se, kurt) = total.mean_stderr_kurtosis();
    let scale = plan.log_scale.exp();
    let mut r = IntegrationResult::real(mean * scale, se * scale, n_samples, Method::Mc);
    if !r.value.is_finite() {
        return Err(NumericError::Domain("non-finite Monte Carlo estimate".into()));
    }
    if kurt > KURTOSIS_GUARD {
        r.warning = Some(format!("heavy-tailed weights (kurtosis {kurt:.1}); error estimate unreliable"));
    }
    Ok(r)
}
