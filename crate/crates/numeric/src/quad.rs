//! Integrand catalogue and deterministic quadrature.

use std::f64::consts::PI;

use selberg_closed_forms::{euler_2f1_prefactor, log_gamma};
use selberg_jack::Partition;
use selberg_par::Exec;

use crate::error::{NumericError, Result};
use crate::poly::DensePoly;
use crate::tanh_sinh::{refine, Pt};

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Quad,
    Mc,
    QSum,
    Torus,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Quad => "quad",
            Method::Mc => "mc",
            Method::QSum => "qsum",
            Method::Torus => "torus",
        }
    }
}

/// A numerical estimate. `imag` is zero for real integrands.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegrationResult {
    pub value: f64,
    pub imag: f64,
    pub err_estimate: f64,
    pub n_evals: u64,
    pub method: Method,
    pub warning: Option<String>,
}

impl IntegrationResult {
    pub(crate) fn real(value: f64, err_estimate: f64, n_evals: u64, method: Method) -> Self {
        IntegrationResult { value, imag: 0.0, err_estimate: err_estimate.abs(), n_evals, method, warning: None }
    }

    /// `|value - target| / err_estimate`, the number of standard errors off.
    pub fn z_score(&self, target: f64) -> f64 {
        if self.err_estimate == 0.0 {
            if self.value == target {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.value - target).abs() / self.err_estimate
        }
    }

    pub fn rel_err(&self, target: f64) -> f64 {
        (self.value - target).abs() / target.abs()
    }
}

/// Integrands of the Selberg family, each over its natural domain.
#[derive(Clone, Debug, PartialEq)]
pub enum DensitySpec {
    /// `prod t^{alpha-1} (1-t)^{beta-1} |Delta|^{2 gamma}` on `[0,1]^n`.
    Selberg { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// `(2 pi)^{-n} prod e^{i theta (a-b)/2} |1 + e^{i theta}|^{a+b} prod |e^{i theta_j} - e^{i theta_k}|^{2 gamma}` on `[-pi, pi]^n`.
    Morris { n: usize, a: f64, b: f64, gamma: f64 },
    /// `(2 pi)^{-n/2} prod e^{-t^2/2} |Delta|^{2 gamma}` on `R^n`.
    Mehta { n: usize, gamma: f64 },
    /// `prod t^{alpha-1} e^{-t} |Delta|^{2 gamma}` on `[0, inf)^n`.
    Laguerre { n: usize, alpha: f64, gamma: f64 },
    /// Interlacing integral with decreasing nodes `a` (length `n+1`) and exponents `s`.
    DixonAnderson { a: Vec<f64>, s: Vec<f64> },
    /// Selberg weight times `P_lambda^{(1/gamma)}(t)`.
    Kadell { n: usize, alpha: f64, beta: f64, gamma: f64, lambda: Partition },
    /// Euler representation; the result is already multiplied by its gamma prefactor,
    /// so it estimates `2F1(a, b; c; (z, .., z))`.
    Euler2F1 { n: usize, a: f64, b: f64, c: f64, gamma: f64, z: f64 },
    /// `t_1..t_p` in `[0,1]`, the rest in `[1, inf)`, with `|1 - t|^{beta-1}`.
    DotsenkoFateev { n: usize, p: usize, alpha: f64, beta: f64, gamma: f64 },
    /// `(2 pi)^{-n} prod (1 + i t)^{-alpha} (1 - i t)^{-beta} |Delta|^{2 gamma}` on `R^n`.
    CauchySc { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Selberg-type weight on the simplex `t_i >= 0, sum t_i <= 1`.
    AskeyRichards { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Interlacing integral of the two-variable Jack integral formula, with its prefactor.
    OkounkovOlshanski { lambda: Partition, gamma: f64, x: [f64; 2] },
    /// Selberg weight with `beta = gamma` times `P_lambda P_mu`.
    HuaKadell { n: usize, alpha: f64, gamma: f64, lambda: Partition, mu: Partition },
}

impl DensitySpec {
    pub fn family(&self) -> &'static str {
        match self {
            DensitySpec::Selberg { .. } => "selberg",
            DensitySpec::Morris { .. } => "morris",
            DensitySpec::Mehta { .. } => "mehta",
            DensitySpec::Laguerre { .. } => "laguerre",
            DensitySpec::DixonAnderson { .. } => "dixon_anderson",
            DensitySpec::Kadell { .. } => "kadell",
            DensitySpec::Euler2F1 { .. } => "euler_2f1",
            DensitySpec::DotsenkoFateev { .. } => "dotsenko_fateev",
            DensitySpec::CauchySc { .. } => "cauchy_sc",
            DensitySpec::AskeyRichards { .. } => "askey_richards",
            DensitySpec::OkounkovOlshanski { .. } => "okounkov_olshanski",
            DensitySpec::HuaKadell { .. } => "hua_kadell",
        }
    }

    /// Number of integration variables.
    pub fn dim(&self) -> usize {
        match self {
            DensitySpec::Selberg { n, .. }
            | DensitySpec::Morris { n, .. }
            | DensitySpec::Mehta { n, .. }
            | DensitySpec::Laguerre { n, .. }
            | DensitySpec::Kadell { n, .. }
            | DensitySpec::Euler2F1 { n, .. }
            | DensitySpec::DotsenkoFateev { n, .. }
            | DensitySpec::CauchySc { n, .. }
            | DensitySpec::AskeyRichards { n, .. }
            | DensitySpec::HuaKadell { n, .. } => *n,
            DensitySpec::DixonAnderson { a, .. } => a.len().saturating_sub(1),
            DensitySpec::OkounkovOlshanski { .. } => 1,
        }
    }
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn pow(base: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        base.powf(e)
    }
}

/// `|t_j - t_i|` for an ordered chain, exact for neighbours.
fn chain_gap(p: &[Pt], i: usize, j: usize) -> f64 {
    if j == i + 1 {
        p[j].dlo
    } else {
        (p[j].x - p[i].x).abs()
    }
}

fn chain_vandermonde(p: &[Pt], two_gamma: f64) -> f64 {
    if two_gamma == 0.0 {
        return 1.0;
    }
    let mut v = 1.0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            v *= chain_gap(p, i, j);
        }
    }
    v.powf(two_gamma)
}

/// Ordered chain `lo <= t_1 <= .. <= t_n <= hi`.
fn chain(lo: f64, hi: f64) -> impl Fn(usize, &[Pt]) -> Option<(f64, f64)> + Sync {
    move |k, p: &[Pt]| Some((if k == 0 { lo } else { p[k - 1].x }, hi))
}

/// `[0,1]` chain variables: distance to 0 and to 1.
fn unit_dists(p: &[Pt], k: usize) -> (f64, f64) {
    let d0 = if k == 0 { p[0].dlo } else { p[k].x };
    (d0, p[k].dhi)
}

fn check_dim(spec: &DensitySpec, max: usize) -> Result<()> {
    let d = spec.dim();
    if d == 0 || d > max {
        return Err(NumericError::Domain(format!("{} needs 1..={max} variables, got {d}", spec.family())));
    }
    Ok(())
}

fn domain(msg: impl Into<String>) -> NumericError {
    NumericError::Domain(msg.into())
}

/// Deterministic quadrature with the default executor.
pub fn quad_integrate(spec: &DensitySpec, rel_tol: f64) -> Result<IntegrationResult> {
    quad_integrate_with(Exec::available(), spec, rel_tol)
}

/// Tanh-sinh quadrature over the ordered sector (times `n!`) or the natural product domain.
pub fn quad_integrate_with(exec: Exec, spec: &DensitySpec, rel_tol: f64) -> Result<IntegrationResult> {
    check_dim(spec, 3)?;
    let done = |r: crate::tanh_sinh::Refined, scale: f64| {
        IntegrationResult::real(r.value * scale, r.err * scale.abs(), r.evals, Method::Quad)
    };
    match spec {
        DensitySpec::Selberg { n, alpha, beta, gamma } => {
            let (n, a, b, g) = (*n, *alpha, *beta, *gamma);
            if a <= 0.0 || b <= 0.0 || 2.0 * g <= -1.0 {
                return Err(domain("selberg needs alpha, beta > 0 and 2 gamma > -1"));
            }
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                for k in 0..p.len() {
                    let (d0, d1) = unit_dists(p, k);
                    v *= pow(d0, a - 1.0) * pow(d1, b - 1.0);
                }
                v
            };
            let e = a.min(b).min(2.0 * g + 1.0);
            Ok(done(refine(exec, n, e, rel_tol, &chain(0.0, 1.0), &f)?, factorial(n)))
        }
        DensitySpec::Kadell { n, alpha, beta, gamma, lambda } => {
            let (n, a, b, g) = (*n, *alpha, *beta, *gamma);
            if a <= 0.0 || b <= 0.0 || 2.0 * g <= -1.0 {
                return Err(domain("kadell needs alpha, beta > 0 and 2 gamma > -1"));
            }
            let jack = DensePoly::jack(lambda, n, g)?;
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                let xs: Vec<f64> = p.iter().map(|q| q.x).collect();
                for k in 0..p.len() {
                    let (d0, d1) = unit_dists(p, k);
                    v *= pow(d0, a - 1.0) * pow(d1, b - 1.0);
                }
                v * jack.eval(&xs)
            };
            let e = a.min(b).min(2.0 * g + 1.0);
            Ok(done(refine(exec, n, e, rel_tol, &chain(0.0, 1.0), &f)?, factorial(n)))
        }
        DensitySpec::HuaKadell { n, alpha, gamma, lambda, mu } => {
            let (n, a, g) = (*n, *alpha, *gamma);
            if a <= 0.0 || g <= 0.0 {
                return Err(domain("hua_kadell needs alpha, gamma > 0"));
            }
            let pl = DensePoly::jack(lambda, n, g)?;
            let pm = DensePoly::jack(mu, n, g)?;
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                let xs: Vec<f64> = p.iter().map(|q| q.x).collect();
                for k in 0..p.len() {
                    let (d0, d1) = unit_dists(p, k);
                    v *= pow(d0, a - 1.0) * pow(d1, g - 1.0);
                }
                v * pl.eval(&xs) * pm.eval(&xs)
            };
            let e = a.min(g);
            Ok(done(refine(exec, n, e, rel_tol, &chain(0.0, 1.0), &f)?, factorial(n)))
        }
        DensitySpec::Euler2F1 { n, a, b, c, gamma, z } => {
            let (n, a, b, c, g, z) = (*n, *a, *b, *c, *gamma, *z);
            let nf = n as f64;
            let alpha = b - (nf - 1.0) * g;
            let beta = c - b - (nf - 1.0) * g;
            if alpha <= 0.0 || beta <= 0.0 || z > 1.0 {
                return Err(domain("euler_2f1 needs b - (n-1)g > 0, c - b - (n-1)g > 0, z <= 1"));
            }
            let at_one = z == 1.0;
            if at_one && beta - a <= 0.0 {
                return Err(domain("euler_2f1 at z = 1 needs c - a - b - (n-1)g > 0"));
            }
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                for k in 0..p.len() {
                    let (d0, d1) = unit_dists(p, k);
                    let lin = if at_one { d1 } else { 1.0 - z * p[k].x };
                    v *= pow(d0, alpha - 1.0) * pow(d1, beta - 1.0) * pow(lin, -a);
                }
                v
            };
            let e = alpha.min(if at_one { beta - a } else { beta }).min(2.0 * g + 1.0);
            let pref = euler_2f1_prefactor(n, b, c, g)?.value();
            Ok(done(refine(exec, n, e, rel_tol, &chain(0.0, 1.0), &f)?, factorial(n) * pref))
        }
        DensitySpec::Morris { n, a, b, gamma } => {
            let (n, a, b, g) = (*n, *a, *b, *gamma);
            if a + b <= -1.0 || 2.0 * g <= -1.0 {
                return Err(domain("morris needs a + b > -1 and 2 gamma > -1"));
            }
            let f = |p: &[Pt]| {
                let mut phase = 0.0;
                let mut v = 1.0;
                for (k, q) in p.iter().enumerate() {
                    phase += q.x;
                    // |1 + e^{i theta}| = 2 cos(theta / 2), measured from the nearer of +-pi
                    let d = if k == 0 { q.dlo.min(q.dhi) } else { (PI + q.x).min(q.dhi) };
                    v *= pow(2.0 * (d / 2.0).sin(), a + b);
                }
                let mut pair = 1.0;
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        pair *= 2.0 * (chain_gap(p, i, j) / 2.0).sin();
                    }
                }
                v * pow(pair, 2.0 * g) * (phase * (a - b) / 2.0).cos()
            };
            let e = (a + b + 1.0).min(2.0 * g + 1.0);
            let scale = factorial(n) / (2.0 * PI).powi(n as i32);
            Ok(done(refine(exec, n, e, rel_tol, &chain(-PI, PI), &f)?, scale))
        }
        DensitySpec::Mehta { n, gamma } => {
            let (n, g) = (*n, *gamma);
            if 2.0 * g <= -1.0 {
                return Err(domain("mehta needs 2 gamma > -1"));
            }
            let l = 12.0 + (2.0 * g.max(0.0) * (n * n) as f64).sqrt();
            let f = |p: &[Pt]| {
                let s: f64 = p.iter().map(|q| q.x * q.x).sum();
                (-0.5 * s).exp() * chain_vandermonde(p, 2.0 * g)
            };
            let scale = factorial(n) / (2.0 * PI).powf(n as f64 / 2.0);
            Ok(done(refine(exec, n, (2.0 * g + 1.0).min(1.0), rel_tol, &chain(-l, l), &f)?, scale))
        }
        DensitySpec::Laguerre { n, alpha, gamma } => {
            let (n, a, g) = (*n, *alpha, *gamma);
            if a <= 0.0 || 2.0 * g <= -1.0 {
                return Err(domain("laguerre needs alpha > 0 and 2 gamma > -1"));
            }
            let top = 60.0 + 4.0 * (a + 2.0 * g.max(0.0) * n as f64);
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                for (k, q) in p.iter().enumerate() {
                    let d0 = if k == 0 { q.dlo } else { q.x };
                    v *= pow(d0, a - 1.0) * (-q.x).exp();
                }
                v
            };
            let e = a.min(2.0 * g + 1.0);
            Ok(done(refine(exec, n, e, rel_tol, &chain(0.0, top), &f)?, factorial(n)))
        }
        DensitySpec::DixonAnderson { a, s } => {
            let n = a.len() - 1;
            if s.len() != a.len() || a.windows(2).any(|w| w[0] <= w[1]) || s.iter().any(|&v| v <= 0.0) {
                return Err(domain("dixon_anderson needs decreasing nodes and positive exponents"));
            }
            let bounds = |k: usize, _: &[Pt]| Some((a[k + 1], a[k]));
            let f = |p: &[Pt]| {
                let mut v = 1.0;
                for i in 0..n {
                    for j in i + 1..n {
                        v *= p[i].x - p[j].x;
                    }
                    for (l, (&al, &sl)) in a.iter().zip(s).enumerate() {
                        let d = if l == i {
                            p[i].dhi
                        } else if l == i + 1 {
                            p[i].dlo
                        } else {
                            (p[i].x - al).abs()
                        };
                        v *= pow(d, sl - 1.0);
                    }
                }
                v
            };
            let e = s.iter().cloned().fold(f64::INFINITY, f64::min);
            Ok(done(refine(exec, n, e, rel_tol, &bounds, &f)?, 1.0))
        }
        DensitySpec::DotsenkoFateev { n, p, alpha, beta, gamma } => {
            let (n, p, a, b, g) = (*n, *p, *alpha, *beta, *gamma);
            let nf = n as f64;
            let tail = 1.0 - a - b - 2.0 * (nf - 1.0) * g;
            if p > n || a <= 0.0 || b <= 0.0 || 2.0 * g <= -1.0 || (p < n && tail <= 0.0) {
                return Err(domain("dotsenko_fateev needs p <= n, alpha, beta > 0 and alpha + beta + 2(n-1)gamma < 1"));
            }
            // variables p.. are u = 1/t in (0, 1]
            let bounds = move |k: usize, q: &[Pt]| Some((if k == 0 || k == p { 0.0 } else { q[k - 1].x }, 1.0));
            let f = |q: &[Pt]| {
                let mut v = 1.0;
                for (k, pt) in q.iter().enumerate() {
                    let d0 = if k == 0 || k == p { pt.dlo } else { pt.x };
                    if k < p {
                        v *= pow(d0, a - 1.0) * pow(pt.dhi, b - 1.0);
                    } else {
                        // t^{alpha-1} |1-t|^{beta-1} dt = u^{-alpha-beta} (1-u)^{beta-1} du
                        v *= pow(d0, -a - b) * pow(pt.dhi, b - 1.0);
                    }
                }
                let mut pair = 1.0;
                for i in 0..n {
                    for j in i + 1..n {
                        let d = match (i < p, j < p) {
                            (true, true) => chain_gap(q, i, j),
                            (false, false) => chain_gap(q, i, j) / (q[i].x * q[j].x),
                            _ => {
                                let (t, u) = (&q[i], &q[j]);
                                (t.dhi + t.x * u.dhi) / u.x
                            }
                        };
                        pair *= d;
                    }
                }
                v * pow(pair, 2.0 * g)
            };
            let e = a.min(b).min(2.0 * g + 1.0).min(if p < n { tail } else { 1.0 });
            let scale = factorial(p) * factorial(n - p);
            Ok(done(refine(exec, n, e, rel_tol, &bounds, &f)?, scale))
        }
        DensitySpec::CauchySc { n, alpha, beta, gamma } => {
            let (n, a, b, g) = (*n, *alpha, *beta, *gamma);
            let e = a + b - 1.0 - 2.0 * (n as f64 - 1.0) * g;
            if e <= 0.0 || 2.0 * g <= -1.0 {
                return Err(domain("cauchy_sc needs alpha + beta - 1 - 2(n-1)gamma > 0"));
            }
            // t = tan(phi): (1 + t^2)^{-(a+b)/2} dt = cos^{a+b-2}(phi) dphi
            let f = |p: &[Pt]| {
                let mut v = 1.0;
                let mut phase = 0.0;
                // each cosine carries its share of the pair denominators
                let own = a + b - 2.0 - 2.0 * g * (p.len() as f64 - 1.0);
                for (k, q) in p.iter().enumerate() {
                    let d = if k == 0 { q.dlo.min(q.dhi) } else { (std::f64::consts::FRAC_PI_2 + q.x).min(q.dhi) };
                    v *= pow(d.sin(), own);
                    phase += q.x;
                }
                let mut pair = 1.0;
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        pair *= chain_gap(p, i, j).sin();
                    }
                }
                v * pow(pair, 2.0 * g) * ((b - a) * phase).cos()
            };
            let h = std::f64::consts::FRAC_PI_2;
            let scale = factorial(n) / (2.0 * PI).powi(n as i32);
            Ok(done(refine(exec, n, e.min(2.0 * g + 1.0), rel_tol, &chain(-h, h), &f)?, scale))
        }
        DensitySpec::AskeyRichards { n, alpha, beta, gamma } => {
            let (n, a, b, g) = (*n, *alpha, *beta, *gamma);
            if a <= 0.0 || b <= 0.0 || 2.0 * g <= -1.0 {
                return Err(domain("askey_richards needs alpha, beta > 0"));
            }
            let bounds = move |k: usize, p: &[Pt]| {
                let used: f64 = p.iter().map(|q| q.x).sum();
                let lo = if k == 0 { 0.0 } else { p[k - 1].x };
                Some((lo, (1.0 - used) / (n - k) as f64))
            };
            let f = |p: &[Pt]| {
                let mut v = chain_vandermonde(p, 2.0 * g);
                for (k, q) in p.iter().enumerate() {
                    let d0 = if k == 0 { q.dlo } else { q.x };
                    v *= pow(d0, a - 1.0);
                }
                // the last variable runs up to 1 - (sum of the others)
                v * pow(p[p.len() - 1].dhi, b - 1.0)
            };
            let e = a.min(b).min(2.0 * g + 1.0);
            Ok(done(refine(exec, n, e, rel_tol, &bounds, &f)?, factorial(n)))
        }
        DensitySpec::OkounkovOlshanski { lambda, gamma, x } => {
            let g = *gamma;
            if lambda.len() > 1 || g <= 0.0 || x[0] >= x[1] {
                return Err(domain("okounkov_olshanski needs at most one part, gamma > 0 and x1 < x2"));
            }
            let l = f64::from(lambda.part(0));
            let f = |p: &[Pt]| pow(p[0].x, l) * pow(p[0].dlo, g - 1.0) * pow(p[0].dhi, g - 1.0);
            let bounds = |_: usize, _: &[Pt]| Some((x[0], x[1]));
            let log_pref = log_gamma(l + 2.0 * g)? - log_gamma(l + g)? - log_gamma(g)?;
            let scale = log_pref.exp() * (x[1] - x[0]).powf(1.0 - 2.0 * g);
            Ok(done(refine(exec, 1, g, rel_tol, &bounds, &f)?, scale))
        }
    }
}

/// The determinant form `det( int_{a_{i+1}}^{a_i} t^{j-1} prod |t - a_l|^{s_l - 1} dt )`,
/// built from one-dimensional quadratures and multiplied by `(-1)^{C(n,2)}` so that it
/// estimates the interlacing integral.
pub fn dixon_anderson_determinant(a: &[f64], s: &[f64], rel_tol: f64) -> Result<f64> {
    let n = a.len().checked_sub(1).ok_or_else(|| domain("need at least one node"))?;
    if s.len() != a.len() || a.windows(2).any(|w| w[0] <= w[1]) || s.iter().any(|&v| v <= 0.0) {
        return Err(domain("dixon_anderson needs decreasing nodes and positive exponents"));
    }
    let e = s.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut m = nalgebra::DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let bounds = |_: usize, _: &[Pt]| Some((a[i + 1], a[i]));
            let f = |p: &[Pt]| {
                let t = p[0];
                let mut v = t.x.powi(j as i32);
                for (l, (&al, &sl)) in a.iter().zip(s).enumerate() {
                    let d = if l == i {
                        t.dhi
                    } else if l == i + 1 {
                        t.dlo
                    } else {
                        (t.x - al).abs()
                    };
                    v *= pow(d, sl - 1.0);
                }
                v
            };
            m[(i, j)] = refine(Exec::Sequential, 1, e, rel_tol, &bounds, &f)?.value;
        }
    }
    // the rows integrate over decreasing intervals, so the Vandermonde has C(n,2) negative factors
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * m.determinant())
}

/// Complex Selberg integral at `n = 1`,
/// `int_{R^2} |r|^{2(alpha-1)} |u - r|^{2(beta-1)} d^2 r`, in polar coordinates.
pub fn complex_selberg_n1(alpha: f64, beta: f64, rel_tol: f64) -> Result<IntegrationResult> {
    if alpha <= 0.0 || beta <= 0.0 || alpha + beta >= 1.0 {
        return Err(domain("complex Selberg at n = 1 needs alpha, beta > 0 and alpha + beta < 1"));
    }
    // inner angle in [0, pi], doubled; outer radius split at 1 with rho = 1/sigma outside
    let bounds = |k: usize, _: &[Pt]| Some(if k == 0 { (0.0, 1.0) } else { (0.0, PI) });
    let angular = |r: &Pt, phi: &Pt| {
        let s = (phi.dlo / 2.0).sin();
        r.dhi * r.dhi + 4.0 * r.x * s * s
    };
    let inside = |p: &[Pt]| 2.0 * pow(p[0].dlo, 2.0 * alpha - 1.0) * pow(angular(&p[0], &p[1]), beta - 1.0);
    let outside = |p: &[Pt]| {
        2.0 * pow(p[0].dlo, -2.0 * alpha - 2.0 * beta + 1.0) * pow(angular(&p[0], &p[1]), beta - 1.0)
    };
    let e = (2.0 * alpha).min(2.0 * beta).min(2.0 - 2.0 * alpha - 2.0 * beta);
    let exec = Exec::available();
    let r1 = refine(exec, 2, e, rel_tol, &bounds, &inside)?;
    let r2 = refine(exec, 2, e, rel_tol, &bounds, &outside)?;
    Ok(IntegrationResult::real(r1.value + r2.value, r1.err + r2.err, r1.evals + r2.evals, Method::Quad))
}
