//! Gamma-product closed forms of the Selberg family.

use std::f64::consts::PI;

use crate::error::{ClosedFormError, Result};
use crate::gamma::{digamma, log_gamma, sin_pi, trigamma};
use crate::jackf::{gen_pochhammer, jack_at_ones};
use crate::GammaProductValue as G;

/// Parameters of a Selberg-type evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalParams {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EvalParams {
    pub fn new(n: usize, alpha: f64, beta: f64, gamma: f64) -> Self {
        EvalParams { n, alpha, beta, gamma }
    }
}

/// Convergence domain of the Selberg integral.
pub fn check_selberg_domain(p: &EvalParams) -> Result<()> {
    if p.n == 0 {
        return Err(ClosedFormError::Domain("n must be positive".into()));
    }
    if !(p.alpha > 0.0 && p.beta > 0.0) {
        return Err(ClosedFormError::Domain(format!(
            "need alpha > 0 and beta > 0, got alpha={} beta={}",
            p.alpha, p.beta
        )));
    }
    let mut bound = 1.0 / p.n as f64;
    if p.n > 1 {
        let m = (p.n - 1) as f64;
        bound = bound.min(p.alpha / m).min(p.beta / m);
    }
    if p.gamma <= -bound {
        return Err(ClosedFormError::Domain(format!("need gamma > {}, got {}", -bound, p.gamma)));
    }
    Ok(())
}

/// The Selberg gamma product without a domain check (analytic continuation).
pub fn selberg_product(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<G> {
    let mut v = G::one();
    for j in 0..n {
        let jf = j as f64;
        v = v
            .times_gamma(alpha + jf * gamma)?
            .times_gamma(beta + jf * gamma)?
            .times_gamma(1.0 + (jf + 1.0) * gamma)?
            .over_gamma(alpha + beta + (n as f64 + jf - 1.0) * gamma)?
            .over_gamma(1.0 + gamma)?;
    }
    Ok(v)
}

/// `S_n(alpha, beta, gamma)` on its convergence domain.
pub fn selberg_rhs(p: &EvalParams) -> Result<G> {
    check_selberg_domain(p)?;
    selberg_product(p.n, p.alpha, p.beta, p.gamma)
}

/// Morris constant `M_n(a, b, gamma)`.
pub fn morris_rhs(n: usize, a: f64, b: f64, gamma: f64) -> Result<G> {
    if a + b + 1.0 <= 0.0 {
        return Err(ClosedFormError::Domain(format!("need a+b+1 > 0, got {}", a + b + 1.0)));
    }
    let mut bound = 1.0 / n.max(1) as f64;
    if n > 1 {
        bound = bound.min((a + b + 1.0) / (n - 1) as f64);
    }
    if gamma <= -bound {
        return Err(ClosedFormError::Domain(format!("need gamma > {}, got {gamma}", -bound)));
    }
    morris_product(n, a, b, gamma)
}

/// Morris gamma product without a domain check.
pub fn morris_product(n: usize, a: f64, b: f64, gamma: f64) -> Result<G> {
    let mut v = G::one();
    for j in 0..n {
        let jg = j as f64 * gamma;
        v = v
            .times_gamma(1.0 + a + b + jg)?
            .times_gamma(1.0 + (j as f64 + 1.0) * gamma)?
            .over_gamma(1.0 + a + jg)?
            .over_gamma(1.0 + b + jg)?
            .over_gamma(1.0 + gamma)?;
    }
    Ok(v)
}

/// `(-1)^{n + C(n,2) gamma} (pi / sin pi b)^n M_n(a, b, gamma)` for integer `gamma`.
pub fn morris_to_selberg(n: usize, a: f64, b: f64, gamma: u32) -> Result<G> {
    let s = sin_pi(b);
    if s == 0.0 {
        return Err(ClosedFormError::VanishingSine("morris_to_selberg".into()));
    }
    let pairs = (n * n.saturating_sub(1) / 2) as u64 * u64::from(gamma);
    let parity = (n as u64 + pairs) % 2;
    let m = morris_product(n, a, b, f64::from(gamma))?;
    let v = m.mul(G::from_real(PI / s).powi(n as i32));
    Ok(if parity == 1 { v.mul(G::from_real(-1.0)) } else { v })
}

/// Macdonald's reflection-group product `prod Gamma(1 + d_i gamma) / Gamma(1 + gamma)`.
pub fn group_product_rhs(degrees: &[u32], gamma: f64) -> Result<G> {
    if degrees.is_empty() {
        return Err(ClosedFormError::Domain("degrees must be nonempty".into()));
    }
    let dmax = f64::from(*degrees.iter().max().expect("nonempty"));
    if gamma <= -1.0 / dmax {
        return Err(ClosedFormError::Domain(format!("need gamma > {}, got {gamma}", -1.0 / dmax)));
    }
    let mut v = G::one();
    for &d in degrees {
        v = v.times_gamma(1.0 + f64::from(d) * gamma)?.over_gamma(1.0 + gamma)?;
    }
    Ok(v)
}

/// Mehta's integral: degrees `1..=n`.
pub fn mehta_rhs(n: usize, gamma: f64) -> Result<G> {
    let degrees: Vec<u32> = (1..=n as u32).collect();
    group_product_rhs(&degrees, gamma)
}

/// BC_n Mehta integral.
pub fn bc_mehta_rhs(n: usize, c: f64, gamma: f64) -> Result<G> {
    if c <= -0.5 {
        return Err(ClosedFormError::Domain(format!("need c > -1/2, got {c}")));
    }
    let mut v = G::one();
    for j in 0..n {
        let jg = j as f64 * gamma;
        v = v
            .times_gamma(1.0 + 2.0 * c + 2.0 * jg)?
            .times_gamma(1.0 + (j as f64 + 1.0) * gamma)?
            .over_gamma(1.0 + c + jg)?
            .over_gamma(1.0 + gamma)?;
    }
    Ok(v)
}

/// Laguerre normalization: the integral of `prod t^{alpha-1} e^{-t} |Delta|^{2 gamma}`
/// over the ordered sector `t_1 > .. > t_n > 0`.
pub fn laguerre_rhs(n: usize, alpha: f64, gamma: f64) -> Result<G> {
    if alpha <= 0.0 {
        return Err(ClosedFormError::Domain(format!("need alpha > 0, got {alpha}")));
    }
    if n > 1 && gamma <= -(1.0 / n as f64).min(alpha / (n - 1) as f64) {
        return Err(ClosedFormError::Domain(format!("gamma {gamma} out of range")));
    }
    let mut v = G::one();
    for j in 0..n {
        let jf = j as f64;
        v = v
            .times_gamma(alpha + jf * gamma)?
            .times_gamma(1.0 + (jf + 1.0) * gamma)?
            .over_gamma(1.0 + gamma)?
            .div(G::from_real(jf + 1.0));
    }
    Ok(v)
}

/// Auxiliary closed forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AuxKind {
    /// Multiple Cauchy beta integral over the real line, normalized by `(2 pi)^{-n}`.
    CauchySc { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Selberg-type integral over the simplex `sum t_i <= 1`.
    AskeyRichards { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Integral over `(R^2)^n` of `prod |r_i|^{2(alpha-1)} |u - r_i|^{2(beta-1)} prod |r_i - r_j|^{4 gamma}`.
    ComplexSelberg { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Jack-argument Gauss sum `2F1(a, b; c; 1^n)`.
    Gauss2F1 { n: usize, a: f64, b: f64, c: f64, gamma: f64 },
}

pub fn aux_rhs(kind: AuxKind) -> Result<G> {
    match kind {
        AuxKind::CauchySc { n, alpha, beta, gamma } => {
            let nf = n as f64;
            if alpha + beta - 1.0 - 2.0 * (nf - 1.0) * gamma <= 0.0 {
                return Err(ClosedFormError::Domain(
                    "need alpha + beta - 1 - 2(n-1) gamma > 0".into(),
                ));
            }
            let mut v = G::from_log((-nf * (alpha + beta - 1.0) + nf * (nf - 1.0) * gamma) * 2f64.ln());
            for j in 0..n {
                let jf = j as f64;
                v = v
                    .times_gamma(alpha + beta - 1.0 - (nf + jf - 1.0) * gamma)?
                    .times_gamma(1.0 + (jf + 1.0) * gamma)?
                    .over_gamma(alpha - jf * gamma)?
                    .over_gamma(beta - jf * gamma)?
                    .over_gamma(1.0 + gamma)?;
            }
            Ok(v)
        }
        AuxKind::AskeyRichards { n, alpha, beta, gamma } => {
            let nf = n as f64;
            if alpha <= 0.0 || beta <= 0.0 {
                return Err(ClosedFormError::Domain("need alpha, beta > 0".into()));
            }
            if n > 1 && gamma <= -(1.0 / nf).min(alpha / (nf - 1.0)) {
                return Err(ClosedFormError::Domain(format!("gamma {gamma} out of range")));
            }
            let mut v = G::gamma(beta)?.over_gamma(alpha * nf + beta + nf * (nf - 1.0) * gamma)?;
            for j in 0..n {
                let jf = j as f64;
                v = v
                    .times_gamma(alpha + jf * gamma)?
                    .times_gamma(1.0 + (jf + 1.0) * gamma)?
                    .over_gamma(1.0 + gamma)?;
            }
            Ok(v)
        }
        AuxKind::ComplexSelberg { n, alpha, beta, gamma } => {
            let p = EvalParams::new(n, alpha, beta, gamma);
            check_selberg_domain(&p)?;
            let nf = n as f64;
            if alpha + beta + (nf - 1.0) * gamma >= 1.0 || alpha + beta + 2.0 * (nf - 1.0) * gamma >= 1.0 {
                return Err(ClosedFormError::Domain(
                    "need alpha + beta + (n-1) gamma < 1 and alpha + beta + 2(n-1) gamma < 1".into(),
                ));
            }
            let s = selberg_product(n, alpha, beta, gamma)?;
            let mut v = s.mul(s);
            for k in 1..=n {
                v = v.div(G::from_real(k as f64));
            }
            for j in 0..n {
                let jf = j as f64;
                let num = sin_pi(alpha + jf * gamma) * sin_pi(beta + jf * gamma) * sin_pi((jf + 1.0) * gamma);
                let den = sin_pi(alpha + beta + (nf + jf - 1.0) * gamma) * sin_pi(gamma);
                if den == 0.0 {
                    return Err(ClosedFormError::VanishingSine("complex Selberg".into()));
                }
                v = v.times(num / den);
            }
            Ok(v)
        }
        AuxKind::Gauss2F1 { n, a, b, c, gamma } => {
            let mut v = G::one();
            for j in 0..n {
                let jg = j as f64 * gamma;
                v = v
                    .times_gamma(c - jg)?
                    .times_gamma(c - a - b - jg)?
                    .over_gamma(c - a - jg)?
                    .over_gamma(c - b - jg)?;
            }
            Ok(v)
        }
    }
}

/// Prefactor of the Euler integral representation of `2F1(a, b; c; (z^n))`.
pub fn euler_2f1_prefactor(n: usize, b: f64, c: f64, gamma: f64) -> Result<G> {
    let mut v = G::one();
    for j in 0..n {
        let jg = j as f64 * gamma;
        v = v
            .times_gamma(c - jg)?
            .times_gamma(1.0 + gamma)?
            .over_gamma(b - jg)?
            .over_gamma(c - b - jg)?
            .over_gamma(1.0 + (j as f64 + 1.0) * gamma)?;
    }
    Ok(v)
}

/// Single step factor `S_{n,p} / S_{n,p-1}` of the Dotsenko-Fateev recurrence.
pub fn df_step_factor(n: usize, p: usize, alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let (nf, pf) = (n as f64, p as f64);
    let num = sin_pi((nf - pf + 1.0) * gamma) * sin_pi(alpha + beta + (nf + pf - 2.0) * gamma);
    let den = sin_pi(pf * gamma) * sin_pi(alpha + (pf - 1.0) * gamma);
    if num == 0.0 || den == 0.0 || !num.is_finite() {
        return Err(ClosedFormError::VanishingSine(format!("Dotsenko-Fateev step p={p}")));
    }
    Ok(pf / (nf - pf + 1.0) * num / den)
}

/// `S_{n,p}` from `S_{n,n}` by inverting the recurrence chain.
pub fn dotsenko_fateev_chain(n: usize, p: usize, alpha: f64, beta: f64, gamma: f64) -> Result<G> {
    if p > n {
        return Err(ClosedFormError::Domain(format!("need p <= n, got p={p} n={n}")));
    }
    let mut v = selberg_product(n, alpha, beta, gamma)?;
    for q in (p + 1..=n).rev() {
        v = v.div(G::from_real(df_step_factor(n, q, alpha, beta, gamma)?));
    }
    Ok(v)
}

/// `alpha -> 1 - alpha - beta - 2(n-1) gamma`.
pub fn df_transform_alpha(n: usize, alpha: f64, beta: f64, gamma: f64) -> f64 {
    1.0 - alpha - beta - 2.0 * (n as f64 - 1.0) * gamma
}

/// Sine product relating `S_n(alpha)` and `S_n(df_transform_alpha(alpha))`.
pub fn functional_equation_factor(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let nf = n as f64;
    let mut v = 1.0;
    for j in 0..n {
        let jf = j as f64;
        let den = sin_pi(alpha + jf * gamma);
        if den == 0.0 {
            return Err(ClosedFormError::VanishingSine("functional equation".into()));
        }
        v *= sin_pi(alpha + beta + (nf + jf - 1.0) * gamma) / den;
    }
    Ok(v)
}

/// Connection coefficients `c_{p,0..=n}`.
pub fn frobenius_coeffs(n: usize, p: usize, alpha: f64, tau: f64, gamma: f64) -> Result<Vec<f64>> {
    if p > n {
        return Err(ClosedFormError::Domain(format!("need p <= n, got p={p} n={n}")));
    }
    let mut out = vec![0.0; n + 1];
    for (i, slot) in out.iter_mut().enumerate().skip(p) {
        let mut v = if (i - p) % 2 == 1 { -1.0 } else { 1.0 };
        for j in 1..=(i - p) {
            let (fi, fj) = (i as f64, j as f64);
            let num = sin_pi((fi - fj + 1.0) * gamma) * sin_pi(alpha + (fi - fj) * gamma);
            let den = sin_pi(fj * gamma) * sin_pi(alpha + tau - 1.0 + (2.0 * fi - fj - 1.0) * gamma);
            if den == 0.0 {
                return Err(ClosedFormError::VanishingSine(format!("c_{{{p},{i}}}")));
            }
            v *= num / den;
        }
        *slot = v;
    }
    Ok(out)
}

/// `log[(2 pi)^{n/2} F_n(beta/2)]`, the Gaussian log-gas normalization.
pub fn coulomb_log_normalization(n: usize, beta: f64) -> Result<f64> {
    let mut v = 0.5 * n as f64 * (2.0 * PI).ln();
    for j in 1..=n {
        v += log_gamma(1.0 + j as f64 * beta / 2.0)? - log_gamma(1.0 + beta / 2.0)?;
    }
    Ok(v)
}

/// Mean and variance of `U` under `exp(-beta U)`: `-d/dbeta log Z` and `d^2/dbeta^2 log Z`.
pub fn coulomb_stats(n: usize, beta: f64) -> Result<(f64, f64)> {
    if beta <= 0.0 {
        return Err(ClosedFormError::Domain(format!("need beta > 0, got {beta}")));
    }
    let mut d1 = 0.0;
    let mut d2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        d1 += 0.5 * jf * digamma(1.0 + jf * beta / 2.0)? - 0.5 * digamma(1.0 + beta / 2.0)?;
        d2 += 0.25 * jf * jf * trigamma(1.0 + jf * beta / 2.0)? - 0.25 * trigamma(1.0 + beta / 2.0)?;
    }
    Ok((-d1, d2))
}

/// Leading small-`s` behaviour `coef * s^exponent` of the `(k+1)`-st neighbour
/// spacing density in the circular beta ensemble with `n` points.
pub fn spacing_leading_term(k: usize, n: usize, beta: f64) -> Result<(f64, f64)> {
    if k + 2 > n {
        return Err(ClosedFormError::Pole {
            arg: n as f64 - k as f64 - 2.0,
            context: format!("(n-k-2)! with k={k} n={n}"),
        });
    }
    let kf = k as f64;
    let m_ratio = morris_product(n - k - 2, (kf + 2.0) * beta / 2.0, (kf + 2.0) * beta / 2.0, beta / 2.0)?
        .div(morris_product(n, 0.0, 0.0, beta / 2.0)?);
    let s = if k == 0 { G::one() } else { selberg_product(k, beta + 1.0, beta + 1.0, beta / 2.0)? };
    let log_fact = log_gamma(n as f64)? - log_gamma(kf + 1.0)? - log_gamma((n - k - 1) as f64)?;
    let v = m_ratio
        .mul(s)
        .mul(G::from_log(log_fact - (kf + 1.0) * (2.0 * PI).ln()));
    Ok((v.value(), kf + beta * (kf + 2.0) * (kf + 1.0) / 2.0))
}

/// Compares the small-`s` spacing asymptotics of `CE_{2/m, mn}` (neighbour order
/// `mk+m-1`) and `CE_{2m, n}` (order `k`), `m = r + 1`. Returns `(agree, residual)`.
pub fn decimation_check(r: usize, k: usize, n: usize) -> Result<(bool, f64)> {
    let m = r + 1;
    let beta = 2.0 / m as f64;
    let beta_p = 2.0 * m as f64;
    let (cl, el) = spacing_leading_term(m * k + m - 1, m * n, beta)?;
    let (cr, er) = spacing_leading_term(k, n, beta_p)?;
    let residual = ((cl - cr) / cr).abs() + (el - er).abs();
    Ok((residual < 1e-10, residual))
}

/// Dixon-Anderson right-hand side for decreasing nodes `a` and exponents `s`.
pub fn dixon_anderson_rhs(a: &[f64], s: &[f64]) -> Result<G> {
    if a.len() != s.len() || a.is_empty() {
        return Err(ClosedFormError::Domain("need equally many nodes and exponents".into()));
    }
    if a.windows(2).any(|w| w[0] <= w[1]) {
        return Err(ClosedFormError::Domain("nodes must be strictly decreasing".into()));
    }
    if s.iter().any(|&v| v <= 0.0) {
        return Err(ClosedFormError::Domain("exponents must be positive".into()));
    }
    let mut v = G::one();
    for &si in s {
        v = v.times_gamma(si)?;
    }
    v = v.over_gamma(s.iter().sum())?;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let d = a[i] - a[j];
            v = v.mul(G::from_log((s[i] + s[j] - 1.0) * d.ln()));
        }
    }
    Ok(v)
}

/// Kadell's generalization: `int P_lambda(t) * Selberg weight`.
pub fn kadell_rhs(n: usize, alpha: f64, beta: f64, gamma: f64, parts: &[u32]) -> Result<G> {
    let p = EvalParams::new(n, alpha, beta, gamma);
    let nf = n as f64;
    let ratio = gen_pochhammer(alpha + (nf - 1.0) * gamma, parts, gamma)
        / gen_pochhammer(alpha + beta + 2.0 * (nf - 1.0) * gamma, parts, gamma);
    Ok(selberg_rhs(&p)?.times(ratio * jack_at_ones(parts, n, gamma)))
}

/// Double-Jack integral with `beta = gamma`:
/// `int P_lambda P_mu prod t^{alpha-1} (1-t)^{gamma-1} |Delta|^{2 gamma}`.
pub fn hua_kadell_rhs(n: usize, alpha: f64, gamma: f64, lambda: &[u32], mu: &[u32]) -> Result<G> {
    let part = |p: &[u32], i: usize| f64::from(p.get(i).copied().unwrap_or(0));
    let nf = n as f64;
    let mut v = G::one();
    for i in 0..n {
        for j in 0..n {
            let base = alpha + part(lambda, i) + part(mu, j);
            let h = 2.0 * nf - (i + 1) as f64 - (j + 1) as f64;
            v = v.times_gamma(base + h * gamma)?.over_gamma(base + (h + 1.0) * gamma)?;
        }
    }
    for j in 0..n {
        let jf = j as f64;
        v = v
            .times_gamma((jf + 1.0) * gamma)?
            .times_gamma(1.0 + (jf + 1.0) * gamma)?
            .over_gamma(1.0 + gamma)?;
    }
    Ok(v.times(jack_at_ones(lambda, n, gamma) * jack_at_ones(mu, n, gamma)))
}

/// Right-hand side of `S_{n+1}(alpha,beta,gamma) = R * S_n(alpha+gamma, beta+gamma, gamma)`.
pub fn anderson_factor(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<G> {
    let nf = n as f64;
    G::from_real(nf + 1.0)
        .times_gamma(alpha)?
        .times_gamma(beta)?
        .times_gamma((nf + 1.0) * gamma)?
        .over_gamma(gamma)?
        .over_gamma(alpha + beta + nf * gamma)
}

/// `2^{n L^2 - 2n} (2L)^{n + n(n-1) gamma} (2 pi)^{-n/2} S_n(L^2/2, L^2/2, gamma)`,
/// which tends to Mehta's integral as `L` grows.
pub fn mehta_limit_sequence(n: usize, gamma: f64, l: f64) -> Result<G> {
    let nf = n as f64;
    let s = selberg_product(n, l * l / 2.0, l * l / 2.0, gamma)?;
    let log_pref = (nf * l * l - 2.0 * nf) * 2f64.ln() + (nf + nf * (nf - 1.0) * gamma) * (2.0 * l).ln()
        - 0.5 * nf * (2.0 * PI).ln();
    Ok(s.mul(G::from_log(log_pref)))
}

/// Terminating well-poised `3F2(a, b, c; 1+a-b, 1+a-c; 1)` summed term by term.
pub fn dixon_3f2_series(a: f64, b: f64, c: f64, max_terms: usize) -> f64 {
    let mut term = 1.0;
    let mut acc = 1.0;
    for k in 0..max_terms {
        let kf = k as f64;
        let num = (a + kf) * (b + kf) * (c + kf);
        if num == 0.0 {
            break;
        }
        term *= num / ((1.0 + a - b + kf) * (1.0 + a - c + kf) * (kf + 1.0));
        acc += term;
    }
    acc
}

/// Dixon's gamma product for the well-poised `3F2` at unit argument.
pub fn dixon_3f2_rhs(a: f64, b: f64, c: f64) -> Result<G> {
    G::gamma(1.0 + a / 2.0)?
        .times_gamma(1.0 + a - b)?
        .times_gamma(1.0 + a - c)?
        .times_gamma(1.0 + a / 2.0 - b - c)?
        .over_gamma(1.0 + a)?
        .over_gamma(1.0 + a / 2.0 - b)?
        .over_gamma(1.0 + a / 2.0 - c)?
        .over_gamma(1.0 + a - b - c)
}
