use selberg_ensembles::{
    circular_gap, draw_many, hermite_beta_sample, ks_two_sample, metropolis_sample, moment_report, selberg_density_sample,
    EnsembleSample, Exec, Family, HermiteMethod, MetropolisConfig, TargetDensity,
};
use selberg_par::derive_seed;

use crate::suite::{Case, CaseCtx, CaseError, CaseResult, Outcome, SuiteCtx};

const KS_LEVEL: f64 = 0.01;

fn sub_seed(ctx: &CaseCtx, label: &[u8]) -> u64 {
    derive_seed(ctx.seed, &[label])
}

/// The `name` row of the moment table, as a z-score outcome.
fn moment(samples: &[EnsembleSample], family: &Family, name: &str, sigmas: f64) -> CaseResult {
    let rows = moment_report(samples, family)?;
    let row = rows.into_iter().find(|r| r.moment == name).ok_or_else(|| CaseError(format!("no {name} row")))?;
    Ok(Outcome::z_score(row.empirical, row.closed_form, row.std_err, sigmas, "z_score").with_evals(samples.len() as u64))
}

fn circular(ctx: &CaseCtx, n: usize, beta: f64, label: &[u8], samples: u64) -> Result<Vec<EnsembleSample>, CaseError> {
    let chains = 100;
    let per_chain = (samples as usize).div_ceil(chains);
    let thinning = 20;
    let config = MetropolisConfig {
        n_steps: per_chain * thinning,
        burn_in: 500,
        thinning,
        seed: sub_seed(ctx, label),
        chains,
    };
    let run = metropolis_sample(TargetDensity::Circular { n, beta }, config)?;
    if let Some(w) = run.warning {
        return Err(CaseError(format!("chain {} acceptance {}", w.chain, w.acceptance)));
    }
    Ok(run.samples)
}

pub(crate) fn cases(s: &SuiteCtx) -> Vec<Case> {
    let samples = s.grid("samples", 1e4) as u64;
    let (hn, hg) = (5usize, 0.6);
    let mut cases = vec![
        Case::new(format!("hermite methods ks n={hn} gamma={hg}"), move |ctx| {
            let count = ctx.samples(samples) as usize;
            let draw = |method, label: &[u8]| {
                draw_many(Exec::available(), count, sub_seed(ctx, label), |sd| hermite_beta_sample(hn, hg, method, sd))
            };
            let a = draw(HermiteMethod::Recurrence, b"recurrence")?;
            let b = draw(HermiteMethod::Tridiagonal, b"tridiagonal")?;
            // one eigenvalue per draw, cycling the position
            let pick = |v: &[EnsembleSample]| -> Vec<f64> { v.iter().enumerate().map(|(i, s)| s.points[i % hn]).collect() };
            let ks = ks_two_sample(&pick(&a), &pick(&b))?;
            Ok(Outcome::p_value(ks.statistic, ks.p_value, ctx.tol("ks", KS_LEVEL), "ks").with_evals(2 * count as u64))
        }),
        Case::new("decimation ks beta=1 n=8 to beta=4 n=4", move |ctx| {
            let count = ctx.samples(samples);
            let fine = circular(ctx, 8, 1.0, b"fine", count)?;
            let coarse = circular(ctx, 4, 4.0, b"coarse", count)?;
            let a: Vec<f64> = fine.iter().enumerate().map(|(i, s)| circular_gap(&s.points, i % 8, 2)).collect();
            let b: Vec<f64> = coarse.iter().enumerate().map(|(i, s)| circular_gap(&s.points, i % 4, 1)).collect();
            let ks = ks_two_sample(&a, &b)?;
            Ok(Outcome::p_value(ks.statistic, ks.p_value, ctx.tol("ks", KS_LEVEL), "ks")
                .with_evals((a.len() + b.len()) as u64))
        }),
        Case::new("cue abs_char_poly_at_minus_one^2 n=2 beta=2", move |ctx| {
            let draws = circular(ctx, 2, 2.0, b"cue", ctx.samples(samples))?;
            moment(&draws, &Family::Circular { n: 2, beta: 2.0 }, "abs_char_poly_at_minus_one^2", ctx.tol("cue_sigmas", 4.0))
        }),
    ];
    for method in [HermiteMethod::Recurrence, HermiteMethod::Tridiagonal] {
        cases.push(Case::new(format!("trace p2 {method:?} n={hn} gamma={hg}").to_lowercase(), move |ctx| {
            let count = ctx.samples(samples) as usize;
            let draws = draw_many(Exec::available(), count, ctx.seed, |sd| hermite_beta_sample(hn, hg, method, sd))?;
            moment(&draws, &Family::Hermite { n: hn, gamma: hg }, "p2", ctx.tol("sigmas", 3.0))
        }));
    }
    for (n, a, b, g) in [(2usize, 1.0, 1.0, 1.0), (3, 1.2, 0.8, 0.6)] {
        cases.push(Case::new(format!("selberg e1 n={n} alpha={a} beta={b} gamma={g}"), move |ctx| {
            let count = ctx.samples(samples) as usize;
            let draws = draw_many(Exec::available(), count, ctx.seed, |sd| selberg_density_sample(n, a, b, g, sd))?;
            moment(&draws, &Family::Selberg { n, alpha: a, beta: b, gamma: g }, "e1", ctx.tol("sigmas", 3.0))
        }));
    }
    cases
}
