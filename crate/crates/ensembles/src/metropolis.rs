use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use selberg_par::{derive_seed, map_indexed, Exec};

use crate::error::{EnsembleError, Result};
use crate::sample::{EnsembleSample, Family};

/// Acceptance rate the burn-in adaptation aims for.
pub const TARGET_ACCEPTANCE: f64 = 0.3;
/// Post burn-in acceptance outside this range raises a [`TuningWarning`].
pub const ACCEPTANCE_RANGE: (f64, f64) = (0.1, 0.9);

/// Unnormalized densities the random-walk sampler can target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TargetDensity {
    /// `prod_{j<k} |e^{i theta_j} - e^{i theta_k}|^beta` on `[-pi, pi)^n`.
    Circular { n: usize, beta: f64 },
    /// `prod t^{(m-n+1) gamma - 1} e^{-t} |Delta|^{2 gamma}` on `(0, inf)^n`.
    Laguerre { n: usize, m: f64, gamma: f64 },
    /// `prod t^{alpha-1} (1-t)^{beta-1} |Delta|^{2 gamma}` on `(0, 1)^n`.
    Selberg { n: usize, alpha: f64, beta: f64, gamma: f64 },
}

impl TargetDensity {
    fn n(&self) -> usize {
        match *self {
            TargetDensity::Circular { n, .. } | TargetDensity::Laguerre { n, .. } | TargetDensity::Selberg { n, .. } => n,
        }
    }

    pub fn family(&self) -> Family {
        match *self {
            TargetDensity::Circular { n, beta } => Family::Circular { n, beta },
            TargetDensity::Laguerre { n, m, gamma } => Family::Laguerre { n, m, gamma },
            TargetDensity::Selberg { n, alpha, beta, gamma } => Family::Selberg { n, alpha, beta, gamma },
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(EnsembleError::Domain(msg));
        if self.n() == 0 {
            return bad("n must be at least 1".into());
        }
        match *self {
            TargetDensity::Circular { beta, .. } if !(beta >= 0.0 && beta.is_finite()) => {
                bad(format!("need beta >= 0, got {beta}"))
            }
            TargetDensity::Laguerre { n, m, gamma } => {
                let shape = (m - n as f64 + 1.0) * gamma;
                if !(gamma >= 0.0 && shape > 0.0 && shape.is_finite()) {
                    bad(format!("need gamma >= 0 and (m-n+1) gamma > 0, got m={m}, gamma={gamma}"))
                } else {
                    Ok(())
                }
            }
            TargetDensity::Selberg { alpha, beta, gamma, .. } if !(alpha > 0.0 && beta > 0.0 && gamma >= 0.0) => {
                bad(format!("need alpha, beta > 0 and gamma >= 0, got {alpha}, {beta}, {gamma}"))
            }
            _ => Ok(()),
        }
    }

    /// Log weight of one coordinate; `-inf` outside the support.
    fn one_body(&self, x: f64) -> f64 {
        match *self {
            TargetDensity::Circular { .. } => 0.0,
            TargetDensity::Laguerre { n, m, gamma } => {
                if x > 0.0 {
                    ((m - n as f64 + 1.0) * gamma - 1.0) * x.ln() - x
                } else {
                    f64::NEG_INFINITY
                }
            }
            TargetDensity::Selberg { alpha, beta, .. } => {
                if x > 0.0 && x < 1.0 {
                    (alpha - 1.0) * x.ln() + (beta - 1.0) * (1.0 - x).ln()
                } else {
                    f64::NEG_INFINITY
                }
            }
        }
    }

    fn pair(&self, x: f64, y: f64) -> f64 {
        match *self {
            TargetDensity::Circular { beta, .. } => beta * (2.0 * ((x - y) / 2.0).sin()).abs().ln(),
            TargetDensity::Laguerre { gamma, .. } | TargetDensity::Selberg { gamma, .. } => {
                2.0 * gamma * (x - y).abs().ln()
            }
        }
    }

    fn wrap(&self, x: f64) -> f64 {
        match self {
            TargetDensity::Circular { .. } => (x + PI).rem_euclid(2.0 * PI) - PI,
            _ => x,
        }
    }

    fn start(&self) -> (Vec<f64>, f64) {
        let n = self.n();
        match *self {
            TargetDensity::Circular { .. } => ((0..n).map(|k| -PI + 2.0 * PI * (k as f64 + 0.5) / n as f64).collect(), 1.0),
            TargetDensity::Laguerre { m, gamma, .. } => {
                let scale = ((m + 1.0) * gamma).max(1.0);
                ((0..n).map(|k| scale * (k as f64 + 1.0)).collect(), scale)
            }
            TargetDensity::Selberg { .. } => ((0..n).map(|k| (k as f64 + 1.0) / (n as f64 + 1.0)).collect(), 0.2),
        }
    }
}

/// Chain lengths are counted in sweeps, one proposal per coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetropolisConfig {
    /// Sweeps after burn-in.
    pub n_steps: usize,
    /// Sweeps used to adapt the step size; discarded.
    pub burn_in: usize,
    /// Keep every `thinning`-th sweep.
    pub thinning: usize,
    pub seed: u64,
    /// Independent chains, each with its own derived seed.
    pub chains: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TuningWarning {
    pub chain: usize,
    pub acceptance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetropolisRun {
    /// Chain by chain, in sweep order.
    pub samples: Vec<EnsembleSample>,
    /// Post burn-in acceptance over all chains.
    pub acceptance: f64,
    pub chain_acceptance: Vec<f64>,
    /// Frozen step size of each chain.
    pub step_sizes: Vec<f64>,
    /// First chain whose acceptance fell outside [`ACCEPTANCE_RANGE`].
    pub warning: Option<TuningWarning>,
}

struct Chain {
    target: TargetDensity,
    points: Vec<f64>,
    step: f64,
    rng: ChaCha8Rng,
}

impl Chain {
    /// One sweep; returns the number of accepted moves.
    fn sweep(&mut self) -> usize {
        let n = self.points.len();
        let mut accepted = 0;
        for i in 0..n {
            let x = self.points[i];
            let z: f64 = StandardNormal.sample(&mut self.rng);
            let y = self.target.wrap(x + self.step * z);
            let mut delta = self.target.one_body(y) - self.target.one_body(x);
            if delta == f64::NEG_INFINITY {
                continue;
            }
            for (k, &p) in self.points.iter().enumerate() {
                if k != i {
                    delta += self.target.pair(y, p) - self.target.pair(x, p);
                }
            }
            if delta.is_nan() {
                continue;
            }
            if delta >= 0.0 || self.rng.random::<f64>().ln() < delta {
                self.points[i] = y;
                accepted += 1;
            }
        }
        accepted
    }
}

fn run_chain(target: TargetDensity, config: &MetropolisConfig, seed: u64) -> (Vec<EnsembleSample>, f64, f64) {
    let (points, step) = target.start();
    let n = points.len();
    let mut chain = Chain { target, points, step, rng: ChaCha8Rng::seed_from_u64(seed) };
    for k in 0..config.burn_in {
        let rate = chain.sweep() as f64 / n as f64;
        let gain = 1.0 / (k as f64 + 1.0).powf(0.6);
        chain.step = (chain.step.ln() + gain * (rate - TARGET_ACCEPTANCE)).exp().clamp(1e-12, 1e6);
    }
    let family = target.family();
    let mut samples = Vec::with_capacity(config.n_steps / config.thinning);
    let mut accepted = 0usize;
    for k in 1..=config.n_steps {
        accepted += chain.sweep();
        if k % config.thinning == 0 {
            samples.push(EnsembleSample::new(chain.points.clone(), family.clone(), seed));
        }
    }
    let rate = accepted as f64 / (config.n_steps * n).max(1) as f64;
    (samples, rate, chain.step)
}

/// Random-walk Metropolis with [`Exec::available`].
pub fn metropolis_sample(target: TargetDensity, config: MetropolisConfig) -> Result<MetropolisRun> {
    metropolis_sample_with(Exec::available(), target, config)
}

/// Runs `config.chains` independent chains. The step size adapts towards
/// [`TARGET_ACCEPTANCE`] during burn-in and is frozen afterwards.
pub fn metropolis_sample_with(exec: Exec, target: TargetDensity, config: MetropolisConfig) -> Result<MetropolisRun> {
    target.validate()?;
    if config.thinning == 0 || config.chains == 0 {
        return Err(EnsembleError::Domain("thinning and chains must be positive".into()));
    }
    let runs = map_indexed(exec, config.chains, |c| {
        run_chain(target, &config, derive_seed(config.seed, &[b"chain", &(c as u64).to_le_bytes()]))
    });
    let mut samples = Vec::with_capacity(runs.iter().map(|r| r.0.len()).sum());
    let mut chain_acceptance = Vec::with_capacity(runs.len());
    let mut step_sizes = Vec::with_capacity(runs.len());
    for (s, rate, step) in runs {
        samples.extend(s);
        chain_acceptance.push(rate);
        step_sizes.push(step);
    }
    let acceptance = chain_acceptance.iter().sum::<f64>() / chain_acceptance.len() as f64;
    let warning = chain_acceptance
        .iter()
        .enumerate()
        .find(|(_, &a)| !(ACCEPTANCE_RANGE.0..=ACCEPTANCE_RANGE.1).contains(&a))
        .map(|(chain, &acceptance)| TuningWarning { chain, acceptance });
    Ok(MetropolisRun { samples, acceptance, chain_acceptance, step_sizes, warning })
}
