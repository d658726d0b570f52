//! Direct summation of the multiple Jackson integral of q-Selberg type.

use selberg_closed_forms::{q_pochhammer, QOrder};
use selberg_par::{map_indexed, Exec};

use crate::error::{NumericError, Result};
use crate::quad::{IntegrationResult, Method};

struct Tables {
    n: usize,
    cut: usize,
    /// one-body weight of variable `i` at index `m`: `tables.one[i][m]`
    one: Vec<Vec<f64>>,
    /// pair factor indexed by `m_j - m_i + cut`
    pair: Vec<f64>,
}

impl Tables {
    fn walk(&self, depth: usize, ms: &mut Vec<usize>, acc: f64, sum: &mut (f64, f64, f64)) {
        for m in 0..=self.cut {
            let mut w = acc * self.one[depth][m];
            for &mi in ms.iter() {
                w *= self.pair[m + self.cut - mi];
            }
            if w == 0.0 {
                continue;
            }
            if depth + 1 == self.n {
                sum.0 += w;
                sum.1 += w.abs();
                if m == self.cut || ms.contains(&self.cut) {
                    sum.2 += w.abs();
                }
            } else {
                ms.push(m);
                self.walk(depth + 1, ms, w, sum);
                ms.pop();
            }
        }
    }
}

/// `int_{[0,1]^n} prod t^{alpha-1} (q t; q)_{beta-1} prod_{i<j} t_i^{2k} (q^{1-k} t_j / t_i; q)_{2k} d_q t`,
/// each index truncated where the geometric tail falls below `tail_tol`.
pub fn jackson_sum(n: usize, alpha: f64, beta: f64, k: u32, q: f64, tail_tol: f64) -> Result<IntegrationResult> {
    jackson_sum_with(Exec::available(), n, alpha, beta, k, q, tail_tol)
}

pub fn jackson_sum_with(
    exec: Exec,
    n: usize,
    alpha: f64,
    beta: f64,
    k: u32,
    q: f64,
    tail_tol: f64,
) -> Result<IntegrationResult> {
    if !(q > 0.0 && q < 1.0) {
        return Err(NumericError::Domain(format!("need 0 < q < 1, got {q}")));
    }
    if alpha <= 0.0 || n == 0 || n > 4 {
        return Err(NumericError::Domain("need alpha > 0 and 1 <= n <= 4".into()));
    }
    if beta <= 0.0 && beta.fract() == 0.0 {
        return Err(NumericError::Domain(format!("beta = {beta} is a nonpositive integer")));
    }
    let qa = q.powf(alpha);
    let cut = ((tail_tol * (1.0 - qa)).ln() / qa.ln()).ceil().max(1.0) as usize;
    if cut.pow(n as u32) > 400_000_000 {
        return Err(NumericError::Size(format!("{cut}^{n} Jackson terms")));
    }
    // r[m] = (q^{m+1}; q)_inf / (q^{m+beta}; q)_inf
    let mut r = vec![0.0; cut + 1];
    r[0] = q_pochhammer(q, q, QOrder::Infinite)? / q_pochhammer(q.powf(beta), q, QOrder::Infinite)?;
    for m in 0..cut {
        let den = 1.0 - q.powi(m as i32 + 1);
        r[m + 1] = r[m] * (1.0 - q.powf(m as f64 + beta)) / den;
    }
    let kf = f64::from(k);
    let one: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let e = alpha + 2.0 * kf * (n - 1 - i) as f64;
            (0..=cut).map(|m| (1.0 - q) * q.powf(m as f64 * e) * r[m]).collect()
        })
        .collect();
    let pair: Vec<f64> = (0..=2 * cut)
        .map(|idx| {
            let d = idx as i64 - cut as i64;
            (0..2 * k as i64).map(|l| 1.0 - q.powf((1 - k as i64 + l + d) as f64)).product()
        })
        .collect();
    let tables = Tables { n, cut, one, pair };
    let parts = map_indexed(exec, cut + 1, |m0| {
        let mut sum = (0.0, 0.0, 0.0);
        let w = tables.one[0][m0];
        if n == 1 {
            sum = (w, w.abs(), if m0 == cut { w.abs() } else { 0.0 });
        } else {
            let mut ms = vec![m0];
            tables.walk(1, &mut ms, w, &mut sum);
        }
        sum
    });
    let (mut value, mut abs, mut shell) = (0.0, 0.0, 0.0);
    for (v, a, s) in parts {
        value += v;
        abs += a;
        shell += s;
    }
    // geometric continuation of the outermost shell, plus rounding
    let err = shell * qa / (1.0 - qa) + 4.0 * f64::EPSILON * abs;
    let evals = ((cut + 1) as u64).pow(n as u32);
    Ok(IntegrationResult::real(value, err, evals, Method::QSum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use selberg_closed_forms::q_selberg_rhs;

    #[test]
    fn one_variable_is_q_beta() {
        let r = jackson_sum(1, 1.5, 2.5, 3, 0.5, 1e-16).unwrap();
        let want = q_selberg_rhs(1, 1.5, 2.5, 3, 0.5).unwrap().value();
        assert!((r.value - want).abs() < 1e-13, "{} {}", r.value, want);
    }
}
