//! Nested double-exponential quadrature over ordered or boxed regions.
//!
//! Every abscissa carries its distances to both ends of its own interval, computed
//! without cancellation, so integrands with `dist^{e}` endpoint factors stay accurate
//! all the way into the clustering region.

use std::f64::consts::FRAC_PI_2;

use selberg_par::{map_indexed, Exec};

use crate::error::{NumericError, Result};

/// A point inside `[lo, hi]` with `dlo = x - lo`, `dhi = hi - x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pt {
    pub x: f64,
    pub dlo: f64,
    pub dhi: f64,
}

#[derive(Clone, Copy, Debug)]
struct Node {
    u: f64,
    uc: f64,
    w: f64,
}

/// Tanh-sinh nodes on `[0, 1]` with step `2^-level`, truncated at `|t| <= tmax`.
#[derive(Clone, Debug)]
pub struct Rule {
    nodes: Vec<Node>,
}

impl Rule {
    pub fn new(level: u32, tmax: f64) -> Rule {
        let h = 0.5f64.powi(level as i32);
        let kmax = (tmax / h).ceil() as i64;
        let mut nodes = Vec::with_capacity(2 * kmax as usize + 1);
        for k in -kmax..=kmax {
            let t = k as f64 * h;
            let s = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * s.abs()).exp();
            // small side = e / (1 + e), large side = 1 / (1 + e)
            let (small, large) = (e / (1.0 + e), 1.0 / (1.0 + e));
            let (u, uc) = if s < 0.0 { (small, large) } else { (large, small) };
            let w = h * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e)) / 2.0;
            if u > 0.0 && uc > 0.0 && w > 0.0 {
                nodes.push(Node { u, uc, w });
            }
        }
        Rule { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Truncation so that `dist^{e-1}` endpoint behaviour is resolved to double precision.
pub fn tmax_for_exponent(e_min: f64) -> f64 {
    let e = e_min.clamp(0.02, 1.0);
    let s = (20.0 / e).min(340.0);
    (s / FRAC_PI_2).asinh()
}

fn place(a: f64, b: f64, n: &Node) -> Pt {
    let len = b - a;
    let dlo = len * n.u;
    let dhi = len * n.uc;
    let x = if n.u < 0.5 { a + dlo } else { b - dhi };
    Pt { x, dlo, dhi }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sum {
    pub value: f64,
    pub abs: f64,
    pub evals: u64,
    pub bad: u64,
}

impl Sum {
    fn add(&mut self, o: Sum, w: f64) {
        self.value += w * o.value;
        self.abs += w * o.abs;
        self.evals += o.evals;
        self.bad += o.bad;
    }
}

fn recurse<B, F>(rule: &Rule, dim: usize, pts: &mut Vec<Pt>, bounds: &B, f: &F) -> Sum
where
    B: Fn(usize, &[Pt]) -> Option<(f64, f64)>,
    F: Fn(&[Pt]) -> f64,
{
    let depth = pts.len();
    let mut acc = Sum::default();
    let Some((a, b)) = bounds(depth, pts) else { return acc };
    if b <= a {
        return acc;
    }
    let len = b - a;
    for n in &rule.nodes {
        pts.push(place(a, b, n));
        let inner = if depth + 1 == dim {
            let v = f(pts);
            if v.is_finite() {
                Sum { value: v, abs: v.abs(), evals: 1, bad: 0 }
            } else {
                Sum { evals: 1, bad: 1, ..Sum::default() }
            }
        } else {
            recurse(rule, dim, pts, bounds, f)
        };
        pts.pop();
        acc.add(inner, n.w * len);
    }
    acc
}

/// One nested tanh-sinh pass. `bounds(k, prefix)` gives the interval of variable `k`
/// given the first `k` points; `None` means an empty slice.
pub fn nested<B, F>(exec: Exec, rule: &Rule, dim: usize, bounds: &B, f: &F) -> Sum
where
    B: Fn(usize, &[Pt]) -> Option<(f64, f64)> + Sync,
    F: Fn(&[Pt]) -> f64 + Sync,
{
    assert!(dim >= 1);
    let Some((a, b)) = bounds(0, &[]) else { return Sum::default() };
    if b <= a {
        return Sum::default();
    }
    let len = b - a;
    let parts = map_indexed(exec, rule.nodes.len(), |i| {
        let n = &rule.nodes[i];
        let mut pts = Vec::with_capacity(dim);
        pts.push(place(a, b, n));
        let s = if dim == 1 {
            let v = f(&pts);
            if v.is_finite() {
                Sum { value: v, abs: v.abs(), evals: 1, bad: 0 }
            } else {
                Sum { evals: 1, bad: 1, ..Sum::default() }
            }
        } else {
            recurse(rule, dim, &mut pts, bounds, f)
        };
        (s, n.w * len)
    });
    let mut acc = Sum::default();
    for (s, w) in parts {
        acc.add(s, w);
    }
    acc
}

/// Outcome of the refinement loop.
#[derive(Clone, Copy, Debug)]
pub struct Refined {
    pub value: f64,
    pub err: f64,
    pub evals: u64,
}

/// Halves the step until successive estimates agree to `rel_tol`.
pub fn refine<B, F>(exec: Exec, dim: usize, e_min: f64, rel_tol: f64, bounds: &B, f: &F) -> Result<Refined>
where
    B: Fn(usize, &[Pt]) -> Option<(f64, f64)> + Sync,
    F: Fn(&[Pt]) -> f64 + Sync,
{
    let max_level = match dim {
        1 => 10,
        2 => 7,
        3 => 5,
        _ => 4,
    };
    let tmax = tmax_for_exponent(e_min);
    let mut prev: Option<f64> = None;
    let mut evals = 0;
    let mut last = (f64::NAN, f64::INFINITY);
    for level in 2..=max_level {
        let rule = Rule::new(level, tmax);
        let s = nested(exec, &rule, dim, bounds, f);
        evals += s.evals;
        if s.bad > 0 {
            return Err(NumericError::Domain(format!("integrand not finite at {} of {} points", s.bad, s.evals)));
        }
        if let Some(p) = prev {
            let err = (s.value - p).abs();
            last = (s.value, err);
            if err <= rel_tol * s.value.abs().max(rel_tol * s.abs) || err == 0.0 {
                return Ok(Refined { value: s.value, err, evals });
            }
        }
        prev = Some(s.value);
    }
    Err(NumericError::Accuracy { value: last.0, err: last.1 })
}
