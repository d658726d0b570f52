//! Residual of the hypergeometric PDE system for a truncated `2F1` with Jack argument.

use num_traits::{One, Zero};
use selberg_algebra::{from_f64, to_f64, Rational};
use selberg_jack::{hyper_layers, JackParams, SymmetricPoly};

use crate::error::{NumericError, Result};

/// Residual of the truncated series and an estimate of what the dropped layers contribute.
#[derive(Clone, Debug, PartialEq)]
pub struct PdeResidual {
    /// `max_i |L_i F_W(x)|`.
    pub residual: f64,
    /// `max_i` of `sum_{w > W} |L_i layer_w(x)|`: three layers plus a geometric tail.
    pub tail_estimate: f64,
}

/// Operator data in exact arithmetic, so the residual carries no rounding error.
struct Operator {
    a: Rational,
    b: Rational,
    c: Rational,
    gamma: Rational,
    /// `powers[i][e] = x_i^e`
    powers: Vec<Vec<Rational>>,
}

impl Operator {
    fn x(&self, i: usize) -> &Rational {
        &self.powers[i][1]
    }

    fn pow(&self, i: usize, e: i32) -> Rational {
        if e < 0 {
            Rational::zero()
        } else {
            self.powers[i][e as usize].clone()
        }
    }

    /// Value, gradient and diagonal Hessian of a polynomial at the point.
    fn jet(&self, f: &SymmetricPoly) -> (Rational, Vec<Rational>, Vec<Rational>) {
        let n = self.powers.len();
        let mut v = Rational::zero();
        let mut g = vec![Rational::zero(); n];
        let mut h = vec![Rational::zero(); n];
        let lp = f.expand_to_laurent();
        for (m, coeff) in lp.terms() {
            let e = &m.exponents()[..n];
            let vals: Vec<Rational> = (0..n).map(|i| self.pow(i, e[i])).collect();
            let rest = |skip: usize| -> Rational {
                let mut r = coeff.clone();
                for (j, val) in vals.iter().enumerate() {
                    if j != skip {
                        r *= val;
                    }
                }
                r
            };
            v += rest(usize::MAX);
            for i in 0..n {
                let k = e[i];
                if k >= 1 {
                    let r = rest(i);
                    g[i] += &r * Rational::from_integer(k.into()) * self.pow(i, k - 1);
                    if k >= 2 {
                        h[i] += r * Rational::from_integer((k * (k - 1)).into()) * self.pow(i, k - 2);
                    }
                }
            }
        }
        (v, g, h)
    }

    /// `(|L_1 F|, .., |L_n F|)` at the point.
    fn apply(&self, f: &SymmetricPoly) -> Vec<f64> {
        let n = self.powers.len();
        let one = Rational::one();
        let nm1 = Rational::from_integer((n as i64 - 1).into());
        let (v, g, h) = self.jet(f);
        let lin0 = &self.c - &nm1 * &self.gamma;
        let lin1 = &self.a + &self.b + &one - &nm1 * &self.gamma;
        let ab = &self.a * &self.b;
        (0..n)
            .map(|i| {
                let xi = self.x(i);
                let wi = xi * (&one - xi);
                let mut l = &wi * &h[i] + (&lin0 - &lin1 * xi) * &g[i] - &ab * &v;
                for j in 0..n {
                    if j != i {
                        let xj = self.x(j);
                        let wj = xj * (&one - xj);
                        l += &self.gamma * (&wi * &g[i] - wj * &g[j]) / (xi - xj);
                    }
                }
                to_f64(&l).abs()
            })
            .collect()
    }
}

/// Applies the PDE system to `sum_{w <= weight}` of the `2F1^{(gamma)}(a, b; c; x)` series,
/// differentiating term by term in exact arithmetic at the binary value of `x`.
pub fn pde_residual_2f1(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    gamma: &Rational,
    x: &[f64],
    weight: u32,
) -> Result<PdeResidual> {
    let n = x.len();
    if n == 0 {
        return Err(NumericError::Domain("need at least one variable".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if x[i] == x[j] {
                return Err(NumericError::Domain("the PDE system needs distinct coordinates".into()));
            }
        }
    }
    let params = JackParams::new(gamma.clone(), n)?;
    let top = weight + 3;
    let layers = hyper_layers(&[a.clone(), b.clone()], std::slice::from_ref(c), &params, top)?;
    let mut powers = Vec::with_capacity(n);
    for &xi in x {
        let r = from_f64(xi).ok_or_else(|| NumericError::Domain(format!("coordinate {xi} is not finite")))?;
        let mut row = vec![Rational::one()];
        for e in 1..=top as usize {
            let next = &row[e - 1] * &r;
            row.push(next);
        }
        powers.push(row);
    }
    let op = Operator { a: a.clone(), b: b.clone(), c: c.clone(), gamma: gamma.clone(), powers };

    let mut head = SymmetricPoly::zero(n);
    for layer in &layers[..=weight as usize] {
        head = head.add(layer)?;
    }
    let residual = op.apply(&head).into_iter().fold(0.0, f64::max);

    let tails: Vec<Vec<f64>> = layers[weight as usize + 1..].iter().map(|l| op.apply(l)).collect();
    let radius = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tail_estimate = (0..n)
        .map(|i| {
            let t: Vec<f64> = tails.iter().map(|v| v[i]).collect();
            let mut s: f64 = t.iter().sum();
            let (p, q) = (t[t.len() - 2], t[t.len() - 1]);
            // successive layer ratios grow towards max |x_i|, so the last observed ratio alone undershoots
            let r = if p > 0.0 { (q / p).max(radius) } else { radius };
            if r < 1.0 {
                s += q * r / (1.0 - r);
            } else {
                s = f64::INFINITY;
            }
            s
        })
        .fold(0.0, f64::max);
    Ok(PdeResidual { residual, tail_estimate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use selberg_algebra::rat;

    #[test]
    fn weight_zero_leaves_ab() {
        let r = pde_residual_2f1(&rat(1, 2), &rat(3, 1), &rat(5, 2), &rat(1, 1), &[0.01, 0.02], 0).unwrap();
        assert!((r.residual - 1.5).abs() < 1e-12);
    }
}
