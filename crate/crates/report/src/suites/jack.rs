use num_traits::Zero;
use selberg_algebra::{int, rat, LaurentPoly, MultiIndex, Rational};
use selberg_jack::{
    ct_inner_product, dominance_leq, hook_products, hyper_series_poly, jack, jack_eval, jack_eval_ones, jack_norm_exact,
    partitions_up_to, JackParams, SymmetricPoly,
};

use crate::suite::{Case, CaseError, CaseResult, Outcome, SuiteCtx};

const GAMMAS: [(i64, i64); 3] = [(3, 7), (5, 3), (2, 1)];

/// Passes iff `failures` is empty; the first failure is shown as `lhs`.
fn tally(checked: usize, failures: Vec<String>) -> Outcome {
    let want = format!("{checked} checked");
    match failures.into_iter().next() {
        None => Outcome::text(want.clone(), want),
        Some(first) => Outcome::text(first, want),
    }
}

fn triangular(gamma: &Rational, n: usize, w: u32) -> CaseResult {
    let pr = JackParams::new(gamma.clone(), n)?;
    let parts = partitions_up_to(w, n);
    let mut bad = Vec::new();
    for lam in &parts {
        let pl = jack(lam, &pr)?;
        if pl.coeff(lam) != int(1) {
            bad.push(format!("P{lam} not monic"));
        }
        for (mu, _) in pl.terms() {
            if !dominance_leq(mu, lam)? {
                bad.push(format!("m{mu} in P{lam}"));
            }
        }
    }
    Ok(tally(parts.len(), bad))
}

fn orthogonality(n: usize, k: u32, w: u32) -> CaseResult {
    let pr = JackParams::new(int(i64::from(k)), n)?;
    let parts = partitions_up_to(w, n);
    let jacks = parts.iter().map(|l| jack(l, &pr)).collect::<Result<Vec<_>, _>>()?;
    let mut bad = Vec::new();
    let mut checked = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let ip = ct_inner_product(&jacks[i], &jacks[j], k)?;
            checked += 1;
            if !ip.is_zero() {
                bad.push(format!("<P{}, P{}> = {ip}", parts[i], parts[j]));
            }
        }
    }
    Ok(tally(checked, bad))
}

fn norms(n: usize, k: u32, w: u32) -> CaseResult {
    let pr = JackParams::new(int(i64::from(k)), n)?;
    let mut bad = Vec::new();
    let parts = partitions_up_to(w, n);
    for lam in &parts {
        let pl = jack(lam, &pr)?;
        let ct = ct_inner_product(&pl, &pl, k)?;
        let formula = jack_norm_exact(lam, &pr)?;
        if ct != formula {
            bad.push(format!("norm of P{lam}: CT {ct}, formula {formula}"));
        }
    }
    Ok(tally(parts.len(), bad))
}

fn evaluation(gamma: &Rational, n: usize, w: u32) -> CaseResult {
    let pr = JackParams::new(gamma.clone(), n)?;
    let ones = vec![int(1); n];
    let parts = partitions_up_to(w, n);
    let mut bad = Vec::new();
    for lam in &parts {
        let direct = jack_eval(lam, &pr, &ones)?;
        let formula = jack_eval_ones(lam, &pr);
        if direct != formula {
            bad.push(format!("P{lam}(1^n): {direct} vs {formula}"));
        }
    }
    Ok(tally(parts.len(), bad))
}

/// Places `p` (in its own variables) at positions `offset..` of a `total`-variable ring.
fn embed(p: &LaurentPoly, offset: usize, total: usize) -> Result<LaurentPoly, CaseError> {
    let terms = p.terms().map(|(m, c)| {
        let mut e = vec![0; total];
        e[offset..offset + p.nvars()].copy_from_slice(&m.exponents()[..p.nvars()]);
        (MultiIndex::new(e), c.clone())
    });
    Ok(LaurentPoly::from_terms(total, false, terms)?)
}

/// Drops terms whose degree in the first `xvars` variables exceeds `max`.
fn truncate_x(p: &LaurentPoly, xvars: usize, max: i32) -> Result<LaurentPoly, CaseError> {
    let terms = p
        .terms()
        .filter(|(m, _)| m.exponents()[..xvars].iter().sum::<i32>() <= max)
        .map(|(m, c)| (m.clone(), c.clone()));
    Ok(LaurentPoly::from_terms(p.nvars(), false, terms)?)
}

/// `sum_lambda c_lambda / c'_lambda P_lambda(x) P_lambda(y) = prod_{i,j} (1 - x_i y_j)^{-gamma}` through weight `w`.
fn cauchy(gamma: &Rational, n: usize, w: u32) -> CaseResult {
    let pr = JackParams::new(gamma.clone(), n)?;
    let total = 2 * n;
    let mut lhs = LaurentPoly::zero(total, false);
    for lam in partitions_up_to(w, n) {
        let (c, cp) = hook_products(&lam, gamma);
        let pl = jack(&lam, &pr)?.expand_to_laurent();
        let term = embed(&pl, 0, total)?.mul(&embed(&pl, n, total)?)?.scale(&(c / cp));
        lhs = lhs.add(&term)?;
    }
    let mut rhs = LaurentPoly::one(total, false);
    for i in 0..n {
        for j in 0..n {
            // (1 - x_i y_j)^{-gamma} = sum_m (gamma)_m / m! (x_i y_j)^m
            let mut coeff = int(1);
            let mut series = LaurentPoly::zero(total, false);
            for m in 0..=w as i32 {
                let mut e = vec![0; total];
                e[i] = m;
                e[n + j] = m;
                series = series.add(&LaurentPoly::monomial(total, false, &e, 0, coeff.clone())?)?;
                coeff = coeff * (gamma + int(i64::from(m))) / int(i64::from(m) + 1);
            }
            rhs = truncate_x(&rhs.mul(&series)?, n, w as i32)?;
        }
    }
    let diff = lhs.sub(&rhs)?;
    let bad = diff.terms().next().map(|(m, c)| format!("differ at {:?} by {c}", m.exponents())).into_iter().collect();
    Ok(tally(lhs.len(), bad))
}

/// `1F0(a; x) = prod_i (1 - x_i)^{-a}`, compared on every `m_lambda` through weight `w`.
fn binomial(gamma: &Rational, n: usize, w: u32) -> CaseResult {
    let pr = JackParams::new(gamma.clone(), n)?;
    let a = rat(2, 9);
    let series: SymmetricPoly = hyper_series_poly(std::slice::from_ref(&a), &[], &pr, w)?;
    let parts = partitions_up_to(w, n);
    let mut bad = Vec::new();
    for lam in &parts {
        let mut expect = int(1);
        for &l in lam.parts() {
            for k in 0..l {
                expect *= (&a + int(i64::from(k))) / int(i64::from(k) + 1);
            }
        }
        let got = series.coeff(lam);
        if got != expect {
            bad.push(format!("m{lam}: {got} vs {expect}"));
        }
    }
    Ok(tally(parts.len(), bad))
}

pub(crate) fn cases(s: &SuiteCtx) -> Vec<Case> {
    let w = s.grid_usize("max_weight", 4) as u32;
    let max_n = s.grid_usize("max_n", 3);
    let cauchy_n = s.grid_usize("cauchy_max_n", 3);
    let mut cases = Vec::new();
    for (p, q) in GAMMAS {
        let g = rat(p, q);
        for n in 1..=max_n {
            let g1 = g.clone();
            cases.push(Case::new(format!("triangular gamma={g} n={n}"), move |_| triangular(&g1, n, w)));
            let g2 = g.clone();
            cases.push(Case::new(format!("evaluation gamma={g} n={n}"), move |_| evaluation(&g2, n, w)));
            let g3 = g.clone();
            cases.push(Case::new(format!("binomial gamma={g} n={n}"), move |_| binomial(&g3, n, w)));
        }
        for n in 1..=cauchy_n {
            let g4 = g.clone();
            cases.push(Case::new(format!("cauchy gamma={g} n={n}"), move |_| cauchy(&g4, n, w)));
        }
    }
    for n in 1..=max_n {
        for k in 1..=2u32 {
            cases.push(Case::new(format!("orthogonality k={k} n={n}"), move |_| orthogonality(n, k, w)));
            cases.push(Case::new(format!("norm k={k} n={n}"), move |_| norms(n, k, w)));
        }
    }
    cases
}
