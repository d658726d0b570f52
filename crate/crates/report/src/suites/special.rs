use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selberg_closed_forms::{
    anderson_factor, askey_wilson_rhs, df_transform_alpha, elliptic_beta_rhs, elliptic_gamma, functional_equation_factor,
    mehta_limit_sequence, mehta_rhs, morris_to_selberg, selberg_product, spiridonov_rhs, theta, EllipticParams,
};
use selberg_numeric::{torus_quadrature, TorusIntegrand};

use crate::suite::{Case, CaseCtx, CaseError, CaseResult, Outcome, SuiteCtx};

const IDENTITY_TOL: f64 = 1e-10;
const STIRLING_TOL: f64 = 0.02;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Worst residual of `check` over `sets` draws from a generator seeded by the case seed.
fn sweep(
    ctx: &CaseCtx,
    sets: usize,
    tol: f64,
    check: impl Fn(&mut ChaCha8Rng) -> Result<f64, CaseError>,
) -> CaseResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut worst = 0.0f64;
    for _ in 0..sets {
        let r = check(&mut rng)?;
        // NaN must not hide behind max
        worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
    }
    Ok(Outcome::residual(worst, 0.0, worst, tol, "residual").with_evals(sets as u64))
}

pub(crate) fn identities(s: &SuiteCtx) -> Vec<Case> {
    let sets = s.grid_usize("sets", 50);
    vec![
        Case::new(format!("anderson recurrence sets={sets} n=1..4"), move |ctx| {
            sweep(ctx, sets, ctx.tol("anderson", IDENTITY_TOL), |rng| {
                let (n, a, b, g) =
                    (rng.random_range(1..=4), rng.random_range(0.1..5.0), rng.random_range(0.1..5.0), rng.random_range(0.05..2.0));
                let lhs = selberg_product(n + 1, a, b, g)?;
                let rhs = anderson_factor(n, a, b, g)?.mul(selberg_product(n, a + g, b + g, g)?);
                Ok(lhs.rel_diff(rhs))
            })
        }),
        Case::new(format!("functional equation sets={sets} n=1..4"), move |ctx| {
            sweep(ctx, sets, ctx.tol("functional_equation", IDENTITY_TOL), |rng| {
                let (n, a, b, g) =
                    (rng.random_range(1..=4), rng.random_range(0.05..0.4), rng.random_range(0.05..0.4), rng.random_range(0.01..0.1));
                let lhs = selberg_product(n, a, b, g)?;
                let rhs = selberg_product(n, df_transform_alpha(n, a, b, g), b, g)?
                    .times(functional_equation_factor(n, a, b, g)?);
                Ok(lhs.rel_diff(rhs))
            })
        }),
        Case::new(format!("small alpha limit sets={sets} n=1..4 alpha=1e-12"), move |ctx| {
            sweep(ctx, sets, ctx.tol("small_alpha", IDENTITY_TOL), |rng| {
                let (n, b, g) = (rng.random_range(1..=4), rng.random_range(0.2..3.0), rng.random_range(0.55..2.0));
                let alpha = 1e-12;
                let lhs = selberg_product(n, alpha, b, g)?.times(alpha).value();
                let rhs = n as f64 * selberg_product(n - 1, 2.0 * g, b, g)?.value();
                Ok(rel(lhs, rhs))
            })
        }),
        Case::new(format!("selberg morris bridge sets={sets} n=1..4"), move |ctx| {
            sweep(ctx, sets, ctx.tol("bridge", IDENTITY_TOL), |rng| {
                let (n, a, b, g): (usize, f64, f64, u32) =
                    (rng.random_range(1..=4), rng.random_range(0.05..2.0), rng.random_range(0.05..0.95), rng.random_range(1..=3));
                let gf = f64::from(g);
                let lhs = selberg_product(n, -b - (n as f64 - 1.0) * gf, a + b + 1.0, gf)?;
                Ok(lhs.rel_diff(morris_to_selberg(n, a, b, g)?))
            })
        }),
        Case::new(format!("stirling limit sets={sets} n=1..3 gamma=0.1..1 L=20"), move |ctx| {
            sweep(ctx, sets, ctx.tol("stirling", STIRLING_TOL), |rng| {
                let (n, g) = (rng.random_range(1..=3), rng.random_range(0.1..=1.0));
                let d = mehta_limit_sequence(n, g, 20.0)?.log_abs - mehta_rhs(n, g)?.log_abs;
                Ok(d.abs().exp_m1())
            })
        }),
    ]
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn balanced_point() -> EllipticParams {
    let p = 0.1f64;
    let t = (p * p).powf(1.0 / 6.0);
    EllipticParams::balanced(p, p, 0.5, [t; 5], 1)
}

fn torus_vs_rhs(ctx: &CaseCtx, params: EllipticParams, grid: usize) -> CaseResult {
    let r = torus_quadrature(&TorusIntegrand::EllipticBeta(params.clone()), grid)?;
    if let Some(w) = r.warning {
        return Err(CaseError(w));
    }
    let want = elliptic_beta_rhs(&params, 1)?;
    let got = c(r.value, r.imag);
    let residual = (got - want).norm() / want.norm();
    Ok(Outcome::residual(r.value, want.re, residual, ctx.tol("torus", 1e-6), "torus").with_evals(r.n_evals))
}

pub(crate) fn elliptic(_: &SuiteCtx) -> Vec<Case> {
    let (p, q) = (c(0.2, 0.0), c(0.2, 0.0));
    let mut cases = Vec::new();
    for z in [c(0.3, 0.1), c(-0.5, 0.4), c(1.7, -0.2)] {
        cases.push(Case::new(format!("gamma recurrence p=q=0.2 z={z}"), move |ctx| {
            let g = elliptic_gamma(z, p, q)?;
            let th = theta(z, p)?;
            let residual = (elliptic_gamma(q * z, p, q)? / g - th).norm();
            Ok(Outcome::residual(th.norm(), th.norm(), residual, ctx.tol("recurrence", IDENTITY_TOL), "residual"))
        }));
        cases.push(Case::new(format!("gamma reflection p=q=0.2 z={z}"), move |ctx| {
            let prod = elliptic_gamma(z, p, q)? * elliptic_gamma(p * q / z, p, q)?;
            let residual = (prod - 1.0).norm();
            Ok(Outcome::residual(prod.re, 1.0, residual, ctx.tol("reflection", IDENTITY_TOL), "residual"))
        }));
    }
    cases.push(Case::new("beta integral p=q=0.1 t_r=(pq)^(1/6)", |ctx| torus_vs_rhs(ctx, balanced_point(), 128)));
    cases.push(Case::new("beta integral p=0.2 q=0.3 mixed t_r", |ctx| {
        torus_vs_rhs(ctx, EllipticParams::balanced(0.2, 0.3, 0.5, [0.5, 0.6, 0.7, 0.8, -0.9], 1), 256)
    }));
    cases.push(Case::new("rank one reduction p=q=0.1 t_r=(pq)^(1/6)", |_| {
        let params = balanced_point();
        let selberg = elliptic_beta_rhs(&params, 1)?;
        let rank_one = spiridonov_rhs(&params)?;
        Ok(Outcome::text(rank_one.to_string(), selberg.to_string()))
    }));
    cases.push(Case::new("askey-wilson limit p=1e-24 t5=1e-10 q=0.3", |ctx| {
        let t = [0.2, 0.3, 0.4, 0.5];
        let params = EllipticParams::balanced(1e-24, 0.3, 0.5, [t[0], t[1], t[2], t[3], 1e-10], 1);
        let ell = elliptic_beta_rhs(&params, 1)?;
        let aw = askey_wilson_rhs(t, 0.3)?;
        let residual = (ell - aw).norm() / aw.abs();
        Ok(Outcome::residual(ell.re, aw, residual, ctx.tol("limit", 1e-8), "residual"))
    }));
    cases.push(Case::new("askey-wilson torus q=0.6", |ctx| {
        let (t, q) = ([0.3, -0.5, 0.4, 0.2], 0.6);
        let r = torus_quadrature(&TorusIntegrand::GustafsonN1 { t, q }, 128)?;
        let want = askey_wilson_rhs(t, q)?;
        Ok(Outcome::relative(r.value, want, ctx.tol("askey_wilson", 1e-10), "torus").with_evals(r.n_evals))
    }));
    cases
}
