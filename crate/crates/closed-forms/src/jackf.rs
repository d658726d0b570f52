//! Floating-point partition factors used by gamma-product evaluations.

/// `[b]_lambda = prod_i (b + (1-i) gamma)_{lambda_i}` (rising factorials).
pub fn gen_pochhammer(b: f64, parts: &[u32], gamma: f64) -> f64 {
    let mut acc = 1.0;
    for (i, &l) in parts.iter().enumerate() {
        let base = b - i as f64 * gamma;
        for k in 0..l {
            acc *= base + f64::from(k);
        }
    }
    acc
}

fn conjugate(parts: &[u32]) -> Vec<u32> {
    let first = parts.first().copied().unwrap_or(0);
    (0..first).map(|j| parts.iter().filter(|&&p| p > j).count() as u32).collect()
}

/// Hook products `(c, c')` with `c = prod (a + l gamma + gamma)`, `c' = prod (a + l gamma + 1)`.
pub fn hook_products(parts: &[u32], gamma: f64) -> (f64, f64) {
    let conj = conjugate(parts);
    let mut c = 1.0;
    let mut cp = 1.0;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = f64::from(row - j - 1);
            let leg = (conj[j as usize] as usize - i - 1) as f64;
            c *= arm + leg * gamma + gamma;
            cp *= arm + leg * gamma + 1.0;
        }
    }
    (c, cp)
}

/// `P_lambda(1^n) = [n gamma]_lambda / c_lambda`.
pub fn jack_at_ones(parts: &[u32], n: usize, gamma: f64) -> f64 {
    gen_pochhammer(n as f64 * gamma, parts, gamma) / hook_products(parts, gamma).0
}
