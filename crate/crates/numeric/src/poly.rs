//! Floating-point view of an exact Laurent polynomial.

use selberg_algebra::{to_f64, LaurentPoly};
use selberg_jack::{jack, JackParams, Partition};

use crate::error::{NumericError, Result};

/// `sum c * x^e` with `f64` coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly {
    nvars: usize,
    terms: Vec<(Vec<i32>, f64)>,
}

impl DensePoly {
    pub fn from_laurent(p: &LaurentPoly) -> DensePoly {
        let n = p.nvars();
        let terms = p.terms().map(|(m, c)| (m.exponents()[..n].to_vec(), to_f64(c))).collect();
        DensePoly { nvars: n, terms }
    }

    /// `P_lambda^{(1/gamma)}` in `n` variables; `gamma` must be exactly representable.
    pub fn jack(lambda: &Partition, n: usize, gamma: f64) -> Result<DensePoly> {
        let g = selberg_algebra::from_f64(gamma)
            .ok_or_else(|| NumericError::Domain(format!("gamma {gamma} is not a finite rational")))?;
        let p = jack(lambda, &JackParams::new(g, n)?)?;
        Ok(DensePoly::from_laurent(&p.expand_to_laurent()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<i32>, f64)] {
        &self.terms
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(x).map(|(&k, &v)| v.powi(k)).product::<f64>())
            .sum()
    }

    /// Value, gradient and diagonal second derivatives at `x`.
    pub fn jet(&self, x: &[f64]) -> (f64, Vec<f64>, Vec<f64>) {
        let n = self.nvars;
        let mut v = 0.0;
        let mut g = vec![0.0; n];
        let mut h = vec![0.0; n];
        for (e, c) in &self.terms {
            let mono: f64 = c * e.iter().zip(x).map(|(&k, &xv)| xv.powi(k)).product::<f64>();
            v += mono;
            for i in 0..n {
                let k = e[i];
                if k == 0 {
                    continue;
                }
                let rest: f64 = c * e
                    .iter()
                    .zip(x)
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, (&kj, &xj))| xj.powi(kj))
                    .product::<f64>();
                g[i] += rest * f64::from(k) * x[i].powi(k - 1);
                h[i] += rest * f64::from(k) * f64::from(k - 1) * x[i].powi(k - 2);
            }
        }
        (v, g, h)
    }
}
