use num_traits::{Signed, Zero};
use selberg_algebra::{to_f64, Rational};

use crate::error::{JackError, Result};
use crate::jack::{jack, JackParams};
use crate::partition::{gen_pochhammer, hook_products, partitions_of, Partition};
use crate::symmetric::SymmetricPoly;

/// Truncated hypergeometric sum and the size of its last weight layer.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSum {
    pub value: Rational,
    /// Absolute value of the weight-`max_weight` layer, a proxy for the truncation error.
    pub last_layer: f64,
}

fn coefficient(
    lambda: &Partition,
    numerators: &[Rational],
    denominators: &[Rational],
    gamma: &Rational,
) -> Result<Rational> {
    let mut c = hook_products(lambda, gamma).1;
    c = Rational::from_integer(1.into()) / c;
    for a in numerators {
        c *= gen_pochhammer(a, lambda, gamma);
    }
    for b in denominators {
        let d = gen_pochhammer(b, lambda, gamma);
        if d.is_zero() {
            return Err(JackError::PochhammerPole { param: b.to_string(), partition: lambda.to_string() });
        }
        c /= d;
    }
    Ok(c)
}

/// Weight layers `sum_{|lambda| = w} prod [a]_lambda / prod [b]_lambda * P_lambda / c'_lambda`
/// for `w = 0..=max_weight`.
pub fn hyper_layers(
    numerators: &[Rational],
    denominators: &[Rational],
    params: &JackParams,
    max_weight: u32,
) -> Result<Vec<SymmetricPoly>> {
    let n = params.nvars();
    let mut layers = Vec::with_capacity(max_weight as usize + 1);
    for w in 0..=max_weight {
        let mut layer = SymmetricPoly::zero(n);
        for lambda in partitions_of(w, n) {
            let c = coefficient(&lambda, numerators, denominators, params.gamma())?;
            if c.is_zero() {
                continue;
            }
            layer = layer.add(&jack(&lambda, params)?.scale(&c))?;
        }
        layers.push(layer);
    }
    Ok(layers)
}

/// The truncated series as a symmetric polynomial.
pub fn hyper_series_poly(
    numerators: &[Rational],
    denominators: &[Rational],
    params: &JackParams,
    max_weight: u32,
) -> Result<SymmetricPoly> {
    let mut acc = SymmetricPoly::zero(params.nvars());
    for layer in hyper_layers(numerators, denominators, params, max_weight)? {
        acc = acc.add(&layer)?;
    }
    Ok(acc)
}

/// `rFs(a; b; x)` with Jack argument, truncated at total weight `max_weight`.
pub fn hyper_series(
    numerators: &[Rational],
    denominators: &[Rational],
    params: &JackParams,
    point: &[Rational],
    max_weight: u32,
) -> Result<HyperSum> {
    let layers = hyper_layers(numerators, denominators, params, max_weight)?;
    let mut value = Rational::zero();
    let mut last = Rational::zero();
    for layer in &layers {
        last = layer.eval(point)?;
        value += &last;
    }
    Ok(HyperSum { value, last_layer: to_f64(&last.abs()) })
}
