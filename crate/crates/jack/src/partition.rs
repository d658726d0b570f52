use std::fmt;

use num_traits::{One, Zero};
use selberg_algebra::Rational;

use crate::error::{JackError, Result};

/// Integer partition with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(JackError::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count() as u32).collect())
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// `(arm, leg)` of every cell, row by row.
    pub fn arms_legs(&self) -> Vec<(u32, u32)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push((row - j - 1, conj.0[j as usize] - i as u32 - 1));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `weight` with at most `max_parts` parts, in decreasing lexicographic order.
pub fn partitions_of(weight: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every weight up to `max_weight`, at most `max_parts` parts.
pub fn partitions_up_to(max_weight: u32, max_parts: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| partitions_of(w, max_parts)).collect()
}

/// `mu <= lambda` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(JackError::UnequalWeight { left: mu.weight(), right: lambda.weight() });
    }
    let n = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0u32, 0u32);
    for i in 0..n {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c = prod (a + l gamma + gamma)` and `c' = prod (a + l gamma + 1)` over the cells.
pub fn hook_products(lambda: &Partition, gamma: &Rational) -> (Rational, Rational) {
    let mut c = Rational::one();
    let mut cp = Rational::one();
    for (arm, leg) in lambda.arms_legs() {
        let a = Rational::from_integer(arm.into());
        let l = Rational::from_integer(leg.into());
        c *= &a + &l * gamma + gamma;
        cp *= a + l * gamma + Rational::one();
    }
    (c, cp)
}

/// Generalized Pochhammer symbol `[b]_lambda = prod_i (b + (1-i) gamma)_{lambda_i}`.
pub fn gen_pochhammer(b: &Rational, lambda: &Partition, gamma: &Rational) -> Rational {
    let mut acc = Rational::one();
    for (i, &l) in lambda.parts().iter().enumerate() {
        let base = b - gamma * Rational::from_integer((i as i64).into());
        for k in 0..l {
            acc *= &base + Rational::from_integer(k.into());
        }
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use selberg_algebra::{int, rat};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 1])).is_err());
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
    }

    #[test]
    fn trims_and_rejects() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
        assert_eq!(partitions_of(3, 3)[0], p(&[3]));
    }

    #[test]
    fn hooks_and_pochhammer() {
        let g = rat(3, 7);
        assert_eq!(hook_products(&Partition::empty(), &g), (int(1), int(1)));
        assert_eq!(hook_products(&p(&[1]), &g), (g.clone(), int(1)));
        let (c, cp) = hook_products(&p(&[2, 1]), &g);
        assert_eq!(c, &g * &g * (int(1) + int(2) * &g));
        assert_eq!(cp, int(2) + &g);
        assert_eq!(gen_pochhammer(&int(2), &p(&[2, 1]), &int(1)), int(6));
        assert_eq!(gen_pochhammer(&(int(3) * &g), &p(&[1]), &g), int(3) * &g);
        assert_eq!(gen_pochhammer(&g, &Partition::empty(), &g), int(1));
    }
}
