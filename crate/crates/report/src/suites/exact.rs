use num_traits::One;
use selberg_algebra::{factorial, QPoly, Rational, DEFAULT_MAX_TERMS};
use selberg_constant_terms::{verify_ct_with_ceiling, CtIdentitySpec, CtReport, CtValue, RootSystem};

use crate::record::Value;
use crate::suite::{Case, CaseCtx, CaseError, CaseResult, Outcome, SuiteCtx};

fn value(v: &CtValue) -> Value {
    match v {
        CtValue::Number(r) => Value::Exact(r.clone()),
        other => Value::Text(other.to_string()),
    }
}

fn verify(ctx: &CaseCtx, spec: &CtIdentitySpec) -> Result<CtReport, CaseError> {
    Ok(verify_ct_with_ceiling(spec, ctx.term_ceiling(DEFAULT_MAX_TERMS))?)
}

fn report(r: &CtReport) -> Outcome {
    Outcome::exact(value(&r.lhs), value(&r.rhs), r.equal)
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(u64::from(n)))
}

/// All length-`n` vectors of nonnegative integers with sum at most `max_sum`.
fn compositions(n: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(v) = stack.pop() {
        if v.len() == n {
            out.push(v);
            continue;
        }
        let used: u32 = v.iter().sum();
        for x in 0..=max_sum - used {
            let mut w = v.clone();
            w.push(x);
            stack.push(w);
        }
    }
    out
}

/// `(a_1 + .. + a_n)! / (a_1! .. a_n!)`
fn multinomial(a: &[u32]) -> Rational {
    a.iter().fold(fact(a.iter().sum()), |acc, &x| acc / fact(x))
}

/// `prod_j (a + b + k j)! (k (j+1))! / ((a + k j)! (b + k j)! k!)`
fn morris_value(n: usize, a: u32, b: u32, k: u32) -> Rational {
    (0..n as u32).fold(Rational::one(), |acc, j| {
        acc * fact(a + b + k * j) * fact(k * (j + 1)) / (fact(a + k * j) * fact(b + k * j) * fact(k))
    })
}

pub(crate) fn dyson(s: &SuiteCtx) -> Vec<Case> {
    let max_n = s.grid_usize("max_n", 4);
    let max_sum = s.grid_usize("max_sum", 5) as u32;
    let max_k = s.grid_usize("equal_max_k", 2) as u32;
    let equal_n = s.grid_usize("equal_max_n", 3);
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for a in compositions(n, max_sum) {
            cases.push(Case::new(format!("a={a:?}"), move |ctx| {
                let r = verify(ctx, &CtIdentitySpec::Dyson { a: a.clone() })?;
                Ok(report(&r))
            }));
        }
    }
    // equal exponents: (n k)! / k!^n
    for n in 1..=equal_n {
        for k in 1..=max_k {
            cases.push(Case::new(format!("equal n={n} k={k}"), move |ctx| {
                let a = vec![k; n];
                let r = verify(ctx, &CtIdentitySpec::Dyson { a: a.clone() })?;
                let want = multinomial(&a);
                let pass = r.equal && r.lhs == CtValue::Number(want.clone());
                Ok(Outcome::exact(value(&r.lhs), want, pass))
            }));
        }
    }
    cases.push(Case::new("value n=3 k=2", |ctx| {
        let r = verify(ctx, &CtIdentitySpec::Dyson { a: vec![2, 2, 2] })?;
        let want = Rational::from_integer(90.into());
        let pass = r.lhs == CtValue::Number(want.clone());
        Ok(Outcome::exact(value(&r.lhs), want, pass))
    }));
    cases
}

fn systems() -> Vec<RootSystem> {
    vec![RootSystem::a(1), RootSystem::a(2), RootSystem::a(3), RootSystem::b(2), RootSystem::c(2), RootSystem::g2()]
}

pub(crate) fn macdonald(s: &SuiteCtx) -> Vec<Case> {
    let max_k = s.grid_usize("max_k", 2) as u32;
    let mut cases = Vec::new();
    for system in systems() {
        for k in 1..=max_k {
            let sys = system.clone();
            cases.push(Case::new(format!("{system} k={k}"), move |ctx| {
                Ok(report(&verify(ctx, &CtIdentitySpec::Macdonald { system: sys.clone(), k })?))
            }));
        }
    }
    for (system, want) in [(RootSystem::a(2), vec![2u32, 3]), (RootSystem::g2(), vec![2, 6])] {
        cases.push(Case::new(format!("degrees {system}"), move |_| {
            let got = system.degrees()?;
            Ok(Outcome::text(format!("{got:?}"), format!("{want:?}")))
        }));
    }
    cases
}

fn morris_grid(s: &SuiteCtx) -> Vec<(usize, u32, u32, u32)> {
    let max_n = s.grid_usize("max_n", 3);
    let max_p = s.grid_usize("max_param", 2) as u32;
    let mut out = Vec::new();
    for n in 1..=max_n {
        for a in 0..=max_p {
            for b in 0..=max_p {
                for k in 0..=max_p {
                    out.push((n, a, b, k));
                }
            }
        }
    }
    out
}

pub(crate) fn morris(s: &SuiteCtx) -> Vec<Case> {
    morris_grid(s)
        .into_iter()
        .map(|(n, a, b, k)| {
            Case::new(format!("n={n} a={a} b={b} k={k}"), move |ctx| {
                let r = verify(ctx, &CtIdentitySpec::Morris { n, a, b, k })?;
                let pass = r.equal && r.lhs == CtValue::Number(morris_value(n, a, b, k));
                Ok(Outcome::exact(value(&r.lhs), value(&r.rhs), pass))
            })
        })
        .collect()
}

/// Exact q-identity plus the classical value at `q = 1`.
fn q_case(ctx: &CaseCtx, spec: &CtIdentitySpec, classical: Rational) -> CaseResult {
    let r = verify(ctx, spec)?;
    let at_one = r.lhs.at_q_one();
    let polynomial = matches!(&r.lhs, CtValue::QFraction { den, .. } if *den == QPoly::one());
    let pass = r.equal && polynomial && at_one.as_ref() == Some(&classical);
    let mut o = Outcome::exact(value(&r.lhs), value(&r.rhs), pass);
    if !pass && r.equal {
        o.rhs = Value::Text(format!("q=1 value {classical}, got {at_one:?}"));
    }
    Ok(o)
}

pub(crate) fn q_morris(s: &SuiteCtx) -> Vec<Case> {
    morris_grid(s)
        .into_iter()
        .map(|(n, a, b, k)| {
            Case::new(format!("n={n} a={a} b={b} k={k}"), move |ctx| {
                q_case(ctx, &CtIdentitySpec::QMorris { n, a, b, k }, morris_value(n, a, b, k))
            })
        })
        .collect()
}

pub(crate) fn q_dyson(s: &SuiteCtx) -> Vec<Case> {
    let max_n = s.grid_usize("max_n", 3);
    let max_p = s.grid_usize("max_param", 2) as u32;
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for a in compositions(n, max_p * n as u32).into_iter().filter(|a| a.iter().all(|&x| x <= max_p)) {
            cases.push(Case::new(format!("a={a:?}"), move |ctx| {
                q_case(ctx, &CtIdentitySpec::QDyson { a: a.clone() }, multinomial(&a))
            }));
        }
    }
    cases
}
