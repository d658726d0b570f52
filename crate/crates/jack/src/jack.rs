use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use selberg_algebra::{build_ct_product, factorial, to_f64, ProductSpec, Rational};
use selberg_closed_forms::GammaProductValue;

use crate::error::{JackError, Result};
use crate::partition::{dominance_leq, gen_pochhammer, hook_products, partitions_of, Partition};
use crate::symmetric::{distinct_permutations, SymmetricPoly};

/// Coupling `gamma` (Jack parameter `1/gamma`) and the number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackParams {
    gamma: Rational,
    nvars: usize,
}

impl JackParams {
    pub fn new(gamma: Rational, nvars: usize) -> Result<Self> {
        if gamma.is_zero() {
            return Err(JackError::ZeroGamma);
        }
        Ok(JackParams { gamma, nvars })
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn n_rational(&self) -> Rational {
        Rational::from_integer(self.nvars.into())
    }
}

/// Applies `sum (x_i d_i)^2 + gamma sum_{i<j} (x_i+x_j)/(x_i-x_j) (x_i d_i - x_j d_j)`.
///
/// On the orbit pair `x^a + x^{s_ij a}` with `a_i = p > q = a_j` the pair term
/// equals `(p-q) x_i^q x_j^q (x_i + x_j)(x_i^d - x_j^d)/(x_i - x_j)`, `d = p - q`,
/// which is a polynomial; only dominant exponent vectors are kept.
pub fn cs_apply(p: &SymmetricPoly, params: &JackParams) -> Result<SymmetricPoly> {
    let n = params.nvars;
    if p.nvars() != n {
        return Err(JackError::VariableMismatch { left: p.nvars(), right: n });
    }
    let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let mut push = |e: Vec<u32>, c: Rational| {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
    };
    for (mu, c) in p.terms() {
        let diag: u32 = mu.parts().iter().map(|&v| v * v).sum();
        for a in distinct_permutations(&mu.padded(n)) {
            push(a.clone(), c * Rational::from_integer(diag.into()));
            for i in 0..n {
                for j in i + 1..n {
                    if a[i] <= a[j] {
                        continue;
                    }
                    let (hi, lo) = (a[i], a[j]);
                    let d = hi - lo;
                    let base = c * &params.gamma * Rational::from_integer(d.into());
                    for k in 0..=d {
                        let mut e = a.clone();
                        e[i] = lo + d - k;
                        e[j] = lo + k;
                        let w = if k == 0 || k == d { base.clone() } else { &base * Rational::from_integer(2.into()) };
                        push(e, w);
                    }
                }
            }
        }
    }
    let mut out = SymmetricPoly::zero(n);
    for (e, c) in acc {
        out.add_term(Partition::new(e).expect("weakly decreasing"), c)?;
    }
    Ok(out)
}

/// Jack polynomial `P_lambda^{(1/gamma)}`, monic in `m_lambda`.
pub fn jack(lambda: &Partition, params: &JackParams) -> Result<SymmetricPoly> {
    let n = params.nvars;
    if lambda.len() > n {
        return Err(JackError::TooManyParts { partition: lambda.to_string(), nvars: n });
    }
    let mut basis = Vec::new();
    for mu in partitions_of(lambda.weight(), n) {
        if dominance_leq(&mu, lambda)? {
            basis.push(mu);
        }
    }
    // Columns: action on each basis monomial.
    let mut columns: Vec<SymmetricPoly> = Vec::with_capacity(basis.len());
    for mu in &basis {
        columns.push(cs_apply(&SymmetricPoly::monomial_sym(mu, n)?, params)?);
    }
    let eigen = columns[0].coeff(lambda);
    let mut u: Vec<Rational> = Vec::with_capacity(basis.len());
    u.push(Rational::one());
    for (idx, mu) in basis.iter().enumerate().skip(1) {
        let mut rhs = Rational::zero();
        for (nu_idx, u_nu) in u.iter().enumerate() {
            rhs += columns[nu_idx].coeff(mu) * u_nu;
        }
        let gap = &eigen - columns[idx].coeff(mu);
        if gap.is_zero() {
            return Err(JackError::NonGeneric {
                gamma: params.gamma.to_string(),
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        u.push(rhs / gap);
    }
    let mut out = SymmetricPoly::zero(n);
    for (mu, c) in basis.into_iter().zip(u) {
        out.add_term(mu, c)?;
    }
    Ok(out)
}

/// Direct evaluation of `P_lambda` at a rational point.
pub fn jack_eval(lambda: &Partition, params: &JackParams, point: &[Rational]) -> Result<Rational> {
    jack(lambda, params)?.eval(point)
}

/// `P_lambda(1^n) = [n gamma]_lambda / c_lambda`.
pub fn jack_eval_ones(lambda: &Partition, params: &JackParams) -> Rational {
    let b = params.n_rational() * &params.gamma;
    gen_pochhammer(&b, lambda, &params.gamma) / hook_products(lambda, &params.gamma).0
}

/// `CT[f(x) g(1/x) prod_{i<j} ((1 - x_i/x_j)(1 - x_j/x_i))^k]`.
pub fn ct_inner_product(f: &SymmetricPoly, g: &SymmetricPoly, k: u32) -> Result<Rational> {
    if f.nvars() != g.nvars() {
        return Err(JackError::VariableMismatch { left: f.nvars(), right: g.nvars() });
    }
    let n = f.nvars();
    let fg = f.expand_to_laurent().mul(&g.expand_to_laurent().invert_x())?;
    let weight = build_ct_product(&ProductSpec::dyson(&vec![i64::from(k); n]))?;
    Ok(fg.ct_of_product(&weight)?.coeff(0))
}

fn norm_rational_part(lambda: &Partition, params: &JackParams) -> Result<Rational> {
    let (_, cp) = hook_products(lambda, &params.gamma);
    let shift = Rational::one() + (params.n_rational() - Rational::one()) * &params.gamma;
    let poch = gen_pochhammer(&shift, lambda, &params.gamma);
    if poch.is_zero() {
        return Err(JackError::PochhammerPole { param: shift.to_string(), partition: lambda.to_string() });
    }
    Ok(cp / poch * jack_eval_ones(lambda, params))
}

/// Quadratic norm `<P_lambda, P_lambda>`:
/// `c'_lambda / [1 + (n-1) gamma]_lambda * Gamma(1 + n gamma) / Gamma(1 + gamma)^n * P_lambda(1^n)`.
pub fn jack_norm_rhs(lambda: &Partition, params: &JackParams) -> Result<GammaProductValue> {
    let g = to_f64(&params.gamma);
    let n = params.nvars;
    let mut v = GammaProductValue::gamma(1.0 + n as f64 * g)?;
    for _ in 0..n {
        v = v.over_gamma(1.0 + g)?;
    }
    Ok(v.times(to_f64(&norm_rational_part(lambda, params)?)))
}

/// The same norm in exact arithmetic when `gamma = k` is a nonnegative integer,
/// where the gamma ratio is `(nk)!/(k!)^n`.
pub fn jack_norm_exact(lambda: &Partition, params: &JackParams) -> Result<Rational> {
    if !params.gamma.is_integer() || params.gamma.is_negative() {
        return Err(JackError::NonIntegerGamma(params.gamma.to_string()));
    }
    let k: u64 = params.gamma.to_integer().try_into().map_err(|_| JackError::NonIntegerGamma(params.gamma.to_string()))?;
    let n = params.nvars as u64;
    let mut ratio = Rational::from_integer(factorial(n * k));
    for _ in 0..n {
        ratio /= Rational::from_integer(factorial(k));
    }
    Ok(ratio * norm_rational_part(lambda, params)?)
}
