use std::fmt;

/// Which ensemble a sample was drawn from, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Zeros of `sum w_i / (a_i - x)`.
    RationalCompact { nodes: Vec<f64> },
    /// Zeros of `x - mu_0 + sum mu_i / (a_i - x)`.
    RationalGaussian { nodes: Vec<f64> },
    /// Selberg density on `(0, 1)^n`.
    Selberg { n: usize, alpha: f64, beta: f64, gamma: f64 },
    /// Gaussian beta ensemble with `beta = 2 gamma`.
    Hermite { n: usize, gamma: f64 },
    /// Circular ensemble `prod |e^{i theta_j} - e^{i theta_k}|^beta`; points are angles in `[-pi, pi)`.
    Circular { n: usize, beta: f64 },
    /// Laguerre density with one-body exponent `(m - n + 1) gamma - 1`.
    Laguerre { n: usize, m: f64, gamma: f64 },
}

impl Family {
    pub fn n(&self) -> usize {
        match self {
            Family::RationalCompact { nodes } => nodes.len().saturating_sub(1),
            Family::RationalGaussian { nodes } => nodes.len() + 1,
            Family::Selberg { n, .. }
            | Family::Hermite { n, .. }
            | Family::Circular { n, .. }
            | Family::Laguerre { n, .. } => *n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";");
        match self {
            Family::RationalCompact { nodes } => write!(f, "rational_compact(a={})", list(nodes)),
            Family::RationalGaussian { nodes } => write!(f, "rational_gaussian(a={})", list(nodes)),
            Family::Selberg { n, alpha, beta, gamma } => {
                write!(f, "selberg(n={n},alpha={alpha},beta={beta},gamma={gamma})")
            }
            Family::Hermite { n, gamma } => write!(f, "hermite(n={n},gamma={gamma})"),
            Family::Circular { n, beta } => write!(f, "circular(n={n},beta={beta})"),
            Family::Laguerre { n, m, gamma } => write!(f, "laguerre(n={n},m={m},gamma={gamma})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleMeta {
    pub family: Family,
    pub seed: u64,
}

/// One draw: points in increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleSample {
    pub points: Vec<f64>,
    pub meta: SampleMeta,
}

impl EnsembleSample {
    pub(crate) fn new(mut points: Vec<f64>, family: Family, seed: u64) -> Self {
        points.sort_by(f64::total_cmp);
        EnsembleSample { points, meta: SampleMeta { family, seed } }
    }
}

/// The last two polynomials of a three-term recurrence, coefficients in increasing degree.
/// Starts from `p_{-1} = 0`, `p_0 = 1`; every step keeps the result monic.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomRecurrenceState {
    prev: Vec<f64>,
    curr: Vec<f64>,
    step: usize,
}

impl Default for RandomRecurrenceState {
    fn default() -> Self {
        RandomRecurrenceState { prev: Vec::new(), curr: vec![1.0], step: 0 }
    }
}

impl RandomRecurrenceState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn current(&self) -> &[f64] {
        &self.curr
    }

    pub fn previous(&self) -> &[f64] {
        &self.prev
    }

    /// `A_j = w2 (x - 1) A_{j-1} + w0 x A_{j-1} + w1 x (x - 1) A_{j-2}`, with `w0 + w1 + w2 = 1`.
    pub fn advance_jacobi(&mut self, w0: f64, w1: f64, w2: f64) {
        let d = self.curr.len();
        let mut next = vec![0.0; d + 1];
        for (k, &c) in self.curr.iter().enumerate() {
            // (w0 + w2) x c - w2 c
            next[k + 1] += (w0 + w2) * c;
            next[k] -= w2 * c;
        }
        for (k, &c) in self.prev.iter().enumerate() {
            // w1 (x^2 - x) c
            next[k + 2] += w1 * c;
            next[k + 1] -= w1 * c;
        }
        next[d] = 1.0;
        self.push(next);
    }

    /// `C_j = (x - r) C_{j-1} - s C_{j-2}`.
    pub fn advance_hermite(&mut self, r: f64, s: f64) {
        let d = self.curr.len();
        let mut next = vec![0.0; d + 1];
        for (k, &c) in self.curr.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= r * c;
        }
        for (k, &c) in self.prev.iter().enumerate() {
            next[k] -= s * c;
        }
        self.push(next);
    }

    fn push(&mut self, next: Vec<f64>) {
        self.prev = std::mem::replace(&mut self.curr, next);
        self.step += 1;
    }

    /// Value and derivative of the current polynomial.
    pub fn eval(&self, x: f64) -> (f64, f64) {
        let mut v = 0.0;
        let mut d = 0.0;
        for &c in self.curr.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    }
}
