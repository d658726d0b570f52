use selberg_algebra::{factorial, rat, Rational};
use selberg_numeric::{gelfond_min, hankel_hyperdet, selberg_exact, stanley_probability, StanleyMode};

use crate::record::Value;
use crate::suite::{Case, Outcome, SuiteCtx};

pub(crate) fn discrete(s: &SuiteCtx) -> Vec<Case> {
    let max_k = s.grid_usize("max_k", 2) as u64;
    let mut cases = vec![Case::new("hyperdet n=2 k=1 alpha=1 beta=1 value", |_| {
        let got = hankel_hyperdet(2, 1, 1, 1)?;
        let want = rat(1, 12);
        let pass = got == want;
        Ok(Outcome::exact(got, want, pass))
    })];
    for k in 1..=max_k {
        for (a, b) in [(1u64, 1u64), (2, 1), (2, 3)] {
            cases.push(Case::new(format!("hyperdet n=2 k={k} alpha={a} beta={b}"), move |_| {
                let got = hankel_hyperdet(2, k as usize, a, b)?;
                // the Hankel hyperdeterminant is S_n(alpha, beta, k) / n!
                let want = selberg_exact(2, a, b, k)? / Rational::from_integer(factorial(2));
                let pass = got == want;
                Ok(Outcome::exact(got, want, pass))
            }));
        }
    }
    cases.push(Case::new("stanley n=2 alpha=1 beta=1 2gamma=2 value", |_| {
        let r = stanley_probability(2, 1, 1, 2, StanleyMode::Exhaustive)?;
        let want = rat(1, 6);
        let got = r.exact.map_or(Value::None, Value::Exact);
        let pass = got == Value::Exact(want.clone());
        Ok(Outcome::exact(got, want, pass))
    }));
    for k in 1..=max_k as u32 {
        for (a, b) in [(1u32, 1u32), (2, 1), (2, 2)] {
            cases.push(Case::new(format!("stanley n=2 alpha={a} beta={b} 2gamma={}", 2 * k), move |_| {
                let r = stanley_probability(2, a, b, 2 * k, StanleyMode::Exhaustive)?;
                let want = selberg_exact(2, u64::from(a), u64::from(b), u64::from(k))?;
                let got = r.exact.map_or(Value::None, Value::Exact);
                let pass = got == Value::Exact(want.clone());
                Ok(Outcome::exact(got, want, pass))
            }));
        }
    }
    cases
}

pub(crate) fn gelfond(s: &SuiteCtx) -> Vec<Case> {
    let restarts = s.grid_usize("restarts", 100);
    vec![
        Case::new("m1", |ctx| {
            let m = gelfond_min(1, 5, ctx.seed)?;
            Ok(Outcome::absolute(m.value, 2.0, ctx.tol("m1", 1e-12), "optimizer"))
        }),
        Case::new(format!("m2 restarts={restarts}"), move |ctx| {
            let m = gelfond_min(2, restarts, ctx.seed)?;
            Ok(bound(m.value, m.lower_bound, m.exceeds_bound()).with_evals(restarts as u64))
        }),
        Case::new(format!("m3 restarts={restarts}"), move |ctx| {
            let m = gelfond_min(3, restarts, ctx.seed)?;
            Ok(bound(m.value, m.lower_bound, m.exceeds_bound()).with_evals(restarts as u64))
        }),
    ]
}

/// `value > bound`; the residual is the margin.
fn bound(value: f64, bound: f64, exceeds: bool) -> Outcome {
    let mut o = Outcome::residual(value, bound, value - bound, f64::INFINITY, "optimizer");
    o.pass = exceeds;
    o
}
