use selberg_algebra::{rat, to_f64, LaurentPoly};
use selberg_closed_forms::{
    aux_rhs, df_step_factor, dixon_anderson_rhs, group_product_rhs, hua_kadell_rhs, kadell_rhs, laguerre_rhs,
    morris_rhs, q_selberg_rhs, selberg_rhs, AuxKind, EvalParams,
};
use selberg_jack::{hyper_series, JackParams, Partition};
use selberg_numeric::{
    complex_selberg_n1, dixon_anderson_determinant, jackson_sum, mc_integrate, okounkov_olshanski_check,
    pde_residual_2f1, quad_integrate, si_identity_check, torus_quadrature, DensitySpec, IntegrationResult,
    TorusIntegrand,
};
use selberg_par::derive_seed;

use crate::suite::{Case, CaseCtx, CaseError, CaseResult, Outcome, SuiteCtx};

/// Default relative tolerances for quadrature by dimension.
const QUAD_TOL: [f64; 3] = [1e-8, 1e-6, 1e-4];
const MC_SIGMAS: f64 = 4.0;
const MC_SAMPLES: u64 = 1_000_000;

fn quad_tol(n: usize) -> f64 {
    QUAD_TOL[n.clamp(1, 3) - 1]
}

fn selberg(n: usize, a: f64, b: f64, g: f64) -> Result<f64, CaseError> {
    Ok(selberg_rhs(&EvalParams::new(n, a, b, g))?.value())
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).expect("literal partitions are valid")
}

fn quad_case(ctx: &CaseCtx, key: &str, dim: usize, spec: &DensitySpec, want: f64) -> CaseResult {
    let tol = ctx.tol(key, quad_tol(dim));
    let r = quad_integrate(spec, tol * 1e-3)?;
    Ok(Outcome::relative(r.value, want, tol, "quad").with_evals(r.n_evals))
}

/// Monte Carlo within `sigmas` standard errors; one rerun with doubled samples on a miss.
fn mc_case(ctx: &CaseCtx, spec: &DensitySpec, want: f64) -> CaseResult {
    let sigmas = ctx.tol("mc_sigmas", MC_SIGMAS);
    let samples = ctx.samples(MC_SAMPLES);
    let mut r: IntegrationResult = mc_integrate(spec, samples, ctx.seed)?;
    let mut evals = r.n_evals;
    if r.z_score(want) >= sigmas {
        r = mc_integrate(spec, 2 * samples, derive_seed(ctx.seed, &[b"rerun"]))?;
        evals += r.n_evals;
    }
    Ok(Outcome::z_score(r.value, want, r.err_estimate, sigmas, "mc").with_evals(evals))
}

fn torus_case(ctx: &CaseCtx, integrand: &TorusIntegrand, grid: usize, want: f64) -> CaseResult {
    let tol = ctx.tol("torus", 1e-8);
    let r = torus_quadrature(integrand, grid)?;
    let mut o = Outcome::relative(r.value, want, tol, "torus").with_evals(r.n_evals);
    if let Some(w) = r.warning {
        return Err(CaseError(w));
    }
    o.pass &= r.imag.abs() <= tol * want.abs();
    Ok(o)
}

pub(crate) fn closed_numeric(_: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    for (a, b, g) in [(1.0, 1.0, 1.0), (0.7, 1.6, 0.35), (2.5, 0.6, 1.5)] {
        cases.push(Case::new(format!("selberg quad n=2 alpha={a} beta={b} gamma={g}"), move |ctx| {
            quad_case(ctx, "quad", 2, &DensitySpec::Selberg { n: 2, alpha: a, beta: b, gamma: g }, selberg(2, a, b, g)?)
        }));
    }
    cases.push(Case::new("selberg mc n=4 alpha=2 beta=2 gamma=1", |ctx| {
        mc_case(ctx, &DensitySpec::Selberg { n: 4, alpha: 2.0, beta: 2.0, gamma: 1.0 }, selberg(4, 2.0, 2.0, 1.0)?)
    }));
    for (a, b) in [(1.0, 1.0), (2.0, 1.0), (3.0, 2.0), (1.5, 1.5)] {
        cases.push(Case::new(format!("morris torus n=1 a={a} b={b}"), move |ctx| {
            let want = morris_rhs(1, a, b, 1.0)?.value();
            torus_case(ctx, &TorusIntegrand::Morris { n: 1, a, b, gamma: 1.0 }, 4096, want)
        }));
    }
    cases.push(Case::new("morris torus n=2 a=2 b=1 gamma=1", |ctx| {
        let want = morris_rhs(2, 2.0, 1.0, 1.0)?.value();
        torus_case(ctx, &TorusIntegrand::Morris { n: 2, a: 2.0, b: 1.0, gamma: 1.0 }, 64, want)
    }));
    for g in [0.5, 1.0] {
        cases.push(Case::new(format!("mehta quad n=2 gamma={g}"), move |ctx| {
            quad_case(ctx, "quad", 2, &DensitySpec::Mehta { n: 2, gamma: g }, group_product_rhs(&[1, 2], g)?.value())
        }));
    }
    cases.push(Case::new("mehta mc n=3 gamma=1", |ctx| {
        mc_case(ctx, &DensitySpec::Mehta { n: 3, gamma: 1.0 }, group_product_rhs(&[1, 2, 3], 1.0)?.value())
    }));
    for (n, a, g) in [(1, 2.5, 0.0), (2, 1.5, 1.0), (2, 0.8, 0.5)] {
        cases.push(Case::new(format!("laguerre quad n={n} alpha={a} gamma={g}"), move |ctx| {
            // the closed form is normalized by 1/n!
            let nf: f64 = (1..=n).map(|i| i as f64).product();
            let want = nf * laguerre_rhs(n, a, g)?.value();
            quad_case(ctx, "quad", n, &DensitySpec::Laguerre { n, alpha: a, gamma: g }, want)
        }));
    }
    for (n, a, b, g) in [(2, 2.0, 2.0, 1.0), (2, 1.3, 0.9, 0.5)] {
        cases.push(Case::new(format!("askey_richards quad n={n} alpha={a} beta={b} gamma={g}"), move |ctx| {
            let want = aux_rhs(AuxKind::AskeyRichards { n, alpha: a, beta: b, gamma: g })?.value();
            quad_case(ctx, "quad", n, &DensitySpec::AskeyRichards { n, alpha: a, beta: b, gamma: g }, want)
        }));
    }
    cases.push(Case::new("askey_richards mc n=2 alpha=2 beta=2 gamma=1", |ctx| {
        let want = aux_rhs(AuxKind::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 })?.value();
        mc_case(ctx, &DensitySpec::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 }, want)
    }));
    for (n, a, b, g) in [(1, 1.5, 2.0, 0.0), (2, 2.0, 2.0, 0.5)] {
        cases.push(Case::new(format!("cauchy quad n={n} alpha={a} beta={b} gamma={g}"), move |ctx| {
            let want = aux_rhs(AuxKind::CauchySc { n, alpha: a, beta: b, gamma: g })?.value();
            quad_case(ctx, "quad", n, &DensitySpec::CauchySc { n, alpha: a, beta: b, gamma: g }, want)
        }));
    }
    let da: [(Vec<f64>, Vec<f64>); 2] =
        [(vec![1.0, 0.0], vec![2.0, 2.0]), (vec![3.0, 1.5, 0.5, 0.0], vec![1.5, 0.7, 2.0, 1.2])];
    for (a, s) in da {
        let dim = a.len() - 1;
        let (a2, s2) = (a.clone(), s.clone());
        cases.push(Case::new(format!("dixon_anderson quad a={a:?} s={s:?}"), move |ctx| {
            let want = dixon_anderson_rhs(&a, &s)?.value();
            quad_case(ctx, "quad", dim, &DensitySpec::DixonAnderson { a: a.clone(), s: s.clone() }, want)
        }));
        cases.push(Case::new(format!("dixon_anderson determinant a={a2:?} s={s2:?}"), move |ctx| {
            let want = dixon_anderson_rhs(&a2, &s2)?.value();
            let tol = ctx.tol("determinant", 1e-9);
            let got = dixon_anderson_determinant(&a2, &s2, tol * 1e-3)?;
            Ok(Outcome::relative(got, want, tol, "quad"))
        }));
    }
    cases
}

pub(crate) fn kadell(_: &SuiteCtx) -> Vec<Case> {
    let mut cases = Vec::new();
    for g in [1.0, 0.5] {
        for l in [vec![1u32], vec![2], vec![1, 1]] {
            cases.push(Case::new(format!("kadell n=2 alpha=1.5 beta=2 gamma={g} lambda={l:?}"), move |ctx| {
                let want = kadell_rhs(2, 1.5, 2.0, g, &l)?.value();
                let spec = DensitySpec::Kadell { n: 2, alpha: 1.5, beta: 2.0, gamma: g, lambda: part(&l) };
                quad_case(ctx, "kadell", 2, &spec, want)
            }));
        }
    }
    cases.push(Case::new("aomoto n=3 alpha=1 beta=1 gamma=2 lambda=[1, 1]", |ctx| {
        let want = kadell_rhs(3, 1.0, 1.0, 2.0, &[1, 1])?.value();
        let spec = DensitySpec::Kadell { n: 3, alpha: 1.0, beta: 1.0, gamma: 2.0, lambda: part(&[1, 1]) };
        quad_case(ctx, "aomoto", 3, &spec, want)
    }));
    for (l, m) in [(vec![1u32], vec![1u32]), (vec![2], vec![]), (vec![2, 1], vec![1])] {
        cases.push(Case::new(format!("hua_kadell n=2 alpha=1.5 gamma=1 lambda={l:?} mu={m:?}"), move |ctx| {
            let want = hua_kadell_rhs(2, 1.5, 1.0, &l, &m)?.value();
            let spec = DensitySpec::HuaKadell { n: 2, alpha: 1.5, gamma: 1.0, lambda: part(&l), mu: part(&m) };
            let tol = ctx.tol("hua_kadell", 1e-5);
            let r = quad_integrate(&spec, tol * 1e-3)?;
            Ok(Outcome::relative(r.value, want, tol, "quad").with_evals(r.n_evals))
        }));
    }
    let (a, b, c, g) = (0.5, 1.5, 3.0, 0.5);
    cases.push(Case::new("euler series n=2 a=1/2 b=3/2 c=3 gamma=1/2 z=1/10", move |ctx| {
        let params = JackParams::new(rat(1, 2), 2)?;
        let z = rat(1, 10);
        let series = hyper_series(&[rat(1, 2), rat(3, 2)], &[rat(3, 1)], &params, &[z.clone(), z], 8)?;
        let want = to_f64(&series.value);
        let tol = ctx.tol("euler", 1e-6);
        let r = quad_integrate(&DensitySpec::Euler2F1 { n: 2, a, b, c, gamma: g, z: 0.1 }, tol * 1e-3)?;
        Ok(Outcome::relative(r.value, want, tol, "quad").with_evals(r.n_evals))
    }));
    cases.push(Case::new("gauss sum n=2 a=1/2 b=3/2 c=3 gamma=1/2", move |ctx| {
        let want = aux_rhs(AuxKind::Gauss2F1 { n: 2, a, b, c, gamma: g })?.value();
        quad_case(ctx, "gauss", 2, &DensitySpec::Euler2F1 { n: 2, a, b, c, gamma: g, z: 1.0 }, want)
    }));
    let oo: [(Vec<u32>, f64, [f64; 2], f64); 3] =
        [(vec![], 0.7, [0.1, 0.9], 1e-10), (vec![1], 1.0, [0.0, 1.0], 1e-8), (vec![2], 1.0 / 3.0, [0.2, 1.5], 1e-6)];
    for (l, g, x, tol) in oo {
        cases.push(Case::new(format!("okounkov_olshanski lambda={l:?} gamma={g} x={x:?}"), move |ctx| {
            let tol = ctx.tol("okounkov_olshanski", tol);
            let r = okounkov_olshanski_check(&part(&l), g, x, tol * 1e-2)?;
            Ok(Outcome::residual(r, 0.0, r, tol, "quad"))
        }));
    }
    cases.push(Case::new("dotsenko_fateev n=2 p=1 alpha=0.3 beta=0.2 gamma=0.1", |ctx| {
        let (a, b, g) = (0.3, 0.2, 0.1);
        let s1 = quad_integrate(&DensitySpec::DotsenkoFateev { n: 2, p: 1, alpha: a, beta: b, gamma: g }, 1e-9)?;
        let s0 = quad_integrate(&DensitySpec::DotsenkoFateev { n: 2, p: 0, alpha: a, beta: b, gamma: g }, 1e-9)?;
        let want = df_step_factor(2, 1, a, b, g)?;
        Ok(Outcome::relative(s1.value / s0.value, want, ctx.tol("dotsenko_fateev", 1e-4), "quad")
            .with_evals(s1.n_evals + s0.n_evals))
    }));
    cases.push(Case::new("complex selberg n=1 alpha=0.4 beta=0.35", |ctx| {
        let want = aux_rhs(AuxKind::ComplexSelberg { n: 1, alpha: 0.4, beta: 0.35, gamma: 0.25 })?.value();
        let tol = ctx.tol("complex", 1e-6);
        let r = complex_selberg_n1(0.4, 0.35, tol * 1e-3)?;
        Ok(Outcome::relative(r.value, want, tol, "quad").with_evals(r.n_evals))
    }));
    cases.push(Case::new("pde n=1 weight=12 x=[0.05]", |ctx| {
        let r = pde_residual_2f1(&rat(1, 2), &rat(3, 4), &rat(5, 2), &rat(1, 1), &[0.05], 12)?;
        Ok(Outcome::residual(r.residual, 0.0, r.residual, ctx.tol("pde", 1e-8), "residual"))
    }));
    cases.push(Case::new("pde n=2 gamma=1/2 weight=8 x=[0.05, 0.03]", |_| {
        let r = pde_residual_2f1(&rat(1, 2), &rat(3, 4), &rat(5, 2), &rat(1, 2), &[0.05, 0.03], 8)?;
        Ok(Outcome::residual(r.residual, r.tail_estimate, r.residual, r.tail_estimate, "residual"))
    }));
    cases.push(Case::new("sine identity dyson n=2 k=1 zeta=5/2", |ctx| {
        let x1 = LaurentPoly::variable(2, false, 0)?;
        let x2 = LaurentPoly::variable(2, false, 1)?;
        let one = LaurentPoly::one(2, false);
        let f = one.sub(&x1.mul(&x2.invert_x())?)?.mul(&one.sub(&x2.mul(&x1.invert_x())?)?)?;
        let r = si_identity_check(&f, 2.5, 1e-10)?;
        Ok(Outcome::residual(r.lhs, r.rhs, r.residual, ctx.tol("sine_identity", 1e-6), "quad"))
    }));
    cases
}

pub(crate) fn q_selberg(s: &SuiteCtx) -> Vec<Case> {
    let max_k = s.grid_usize("max_k", 2) as u32;
    let mut cases = Vec::new();
    for (qn, qd) in [(1u32, 2u32), (9, 10)] {
        let q = f64::from(qn) / f64::from(qd);
        for k in 1..=max_k {
            for (a, b) in [(1.0, 1.0), (1.5, 2.5)] {
                cases.push(Case::new(format!("jackson n=2 q={qn}/{qd} k={k} alpha={a} beta={b}"), move |ctx| {
                    let r = jackson_sum(2, a, b, k, q, 1e-16)?;
                    let want = q_selberg_rhs(2, a, b, k, q)?.value();
                    // absolute below 1, relative above
                    let tol = ctx.tol("jackson", 1e-10) * want.abs().max(1.0);
                    Ok(Outcome::absolute(r.value, want, tol, "q_sum").with_evals(r.n_evals))
                }));
            }
        }
    }
    cases.push(Case::new("jackson n=1 q=1/2 k=0..3 alpha=1 beta=1", |ctx| {
        let mut worst = 0.0f64;
        let mut evals = 0;
        for k in 0..=3 {
            let r = jackson_sum(1, 1.0, 1.0, k, 0.5, 1e-16)?;
            evals += r.n_evals;
            worst = worst.max((r.value - q_selberg_rhs(1, 1.0, 1.0, k, 0.5)?.value()).abs());
        }
        Ok(Outcome::residual(worst, 0.0, worst, ctx.tol("jackson", 1e-10), "q_sum").with_evals(evals))
    }));
    cases.push(Case::new("classical limit n=2 q=0.99 k=1", |ctx| {
        let r = jackson_sum(2, 1.0, 1.0, 1, 0.99, 1e-14)?;
        let want = selberg(2, 1.0, 1.0, 1.0)?;
        Ok(Outcome::absolute(r.value, want, ctx.tol("classical", 1e-2), "q_sum").with_evals(r.n_evals))
    }));
    cases
}
