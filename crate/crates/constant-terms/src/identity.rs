use std::fmt;

use num_traits::{One, Zero};
use selberg_algebra::{build_ct_product, factorial, format_rational, LaurentPoly, ProductSpec, QPoly, Rational};

use crate::error::{CtError, Result};
use crate::roots::RootSystem;

/// A constant-term identity instance with its integer couplings.
#[derive(Clone, Debug, PartialEq)]
pub enum CtIdentitySpec {
    /// `prod_{i != j} (1 - x_i/x_j)^{a_i}`.
    Dyson { a: Vec<u32> },
    /// `prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}`.
    QDyson { a: Vec<u32> },
    /// `prod_j (1 - x_j)^a (1 - 1/x_j)^b prod_{i != j} (1 - x_i/x_j)^k`.
    Morris { n: usize, a: u32, b: u32, k: u32 },
    /// `prod_j (x_j;q)_a (q/x_j;q)_b prod_{i<j} (x_i/x_j;q)_k (q x_j/x_i;q)_k`.
    QMorris { n: usize, a: u32, b: u32, k: u32 },
    /// `prod_{alpha in Phi} (1 - e^alpha)^k`.
    Macdonald { system: RootSystem, k: u32 },
    /// `prod_{alpha > 0} prod_{i=1}^k (1 - q^{i s - 1} e^{-alpha})(1 - q^{(i-1) s + 1} e^alpha)`.
    QMacdonald { system: RootSystem, k: u32 },
    /// `prod_{alpha in BC_n} (1 - e^alpha)^{k_alpha}`.
    Bcs { n: usize, k1: u32, k2: u32, k3: u32 },
}

impl CtIdentitySpec {
    pub fn name(&self) -> &'static str {
        match self {
            CtIdentitySpec::Dyson { .. } => "dyson",
            CtIdentitySpec::QDyson { .. } => "q_dyson",
            CtIdentitySpec::Morris { .. } => "morris",
            CtIdentitySpec::QMorris { .. } => "q_morris",
            CtIdentitySpec::Macdonald { .. } => "macdonald",
            CtIdentitySpec::QMacdonald { .. } => "q_macdonald",
            CtIdentitySpec::Bcs { .. } => "bcs",
        }
    }
}

impl fmt::Display for CtIdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtIdentitySpec::Dyson { a } | CtIdentitySpec::QDyson { a } => write!(f, "{} a={a:?}", self.name()),
            CtIdentitySpec::Morris { n, a, b, k } | CtIdentitySpec::QMorris { n, a, b, k } => {
                write!(f, "{} n={n} a={a} b={b} k={k}", self.name())
            }
            CtIdentitySpec::Macdonald { system, k } | CtIdentitySpec::QMacdonald { system, k } => {
                write!(f, "{} {system} k={k}", self.name())
            }
            CtIdentitySpec::Bcs { n, k1, k2, k3 } => write!(f, "bcs n={n} k1={k1} k2={k2} k3={k3}"),
        }
    }
}

/// An exact constant-term value: a rational number or a rational function of `q`.
#[derive(Clone, Debug, PartialEq)]
pub enum CtValue {
    Number(Rational),
    QFraction { num: QPoly, den: QPoly },
}

impl CtValue {
    fn q_fraction(num: QPoly, den: QPoly) -> CtValue {
        match num.div_rem(&den) {
            Ok((quot, rem)) if rem.is_zero() => CtValue::QFraction { num: quot, den: QPoly::one() },
            _ => CtValue::QFraction { num, den },
        }
    }

    fn equals(&self, other: &CtValue) -> bool {
        match (self, other) {
            (CtValue::Number(a), CtValue::Number(b)) => a == b,
            (CtValue::QFraction { num: n1, den: d1 }, CtValue::QFraction { num: n2, den: d2 }) => {
                n1.mul(d2) == n2.mul(d1)
            }
            _ => false,
        }
    }

    /// Value at `q = 1` (numbers are returned unchanged).
    pub fn at_q_one(&self) -> Option<Rational> {
        match self {
            CtValue::Number(v) => Some(v.clone()),
            CtValue::QFraction { num, den } => {
                let d = den.eval(&Rational::one());
                if d.is_zero() {
                    None
                } else {
                    Some(num.eval(&Rational::one()) / d)
                }
            }
        }
    }
}

impl fmt::Display for CtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtValue::Number(v) => write!(f, "{}", format_rational(v)),
            CtValue::QFraction { num, den } if *den == QPoly::one() => write!(f, "{num}"),
            CtValue::QFraction { num, den } => write!(f, "({num})/({den})"),
        }
    }
}

/// Both sides of a constant-term identity.
#[derive(Clone, Debug, PartialEq)]
pub struct CtReport {
    pub spec: CtIdentitySpec,
    pub lhs: CtValue,
    pub rhs: CtValue,
    pub equal: bool,
}

fn ratio(n: usize, i: usize, j: usize) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] += 1;
    e[j] -= 1;
    e
}

fn unit(n: usize, i: usize, sign: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = sign;
    e
}

fn neg(v: &[i32]) -> Vec<i32> {
    v.iter().map(|x| -x).collect()
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// CT of `left * right`, expanding each half separately.
fn split_ct(left: ProductSpec, right: ProductSpec) -> Result<QPoly> {
    let l = build_ct_product(&left)?;
    let r = build_ct_product(&right)?;
    Ok(l.ct_of_product(&r)?)
}

fn ct_number(left: ProductSpec, right: ProductSpec) -> Result<CtValue> {
    Ok(CtValue::Number(split_ct(left, right)?.coeff(0)))
}

fn ct_q(left: ProductSpec, right: ProductSpec) -> Result<CtValue> {
    Ok(CtValue::QFraction { num: split_ct(left, right)?, den: QPoly::one() })
}

fn q_multinomial(total: usize, parts: &[usize]) -> CtValue {
    let den = parts.iter().fold(QPoly::one(), |acc, &p| acc.mul(&QPoly::q_factorial(p)));
    CtValue::q_fraction(QPoly::q_factorial(total), den)
}

/// Computes both sides of the identity exactly.
pub fn verify_ct(spec: &CtIdentitySpec) -> Result<CtReport> {
    verify_ct_with_ceiling(spec, selberg_algebra::DEFAULT_MAX_TERMS)
}

/// As [`verify_ct`] with an explicit term ceiling for the expansions.
pub fn verify_ct_with_ceiling(spec: &CtIdentitySpec, ceiling: usize) -> Result<CtReport> {
    let (lhs, rhs) = match spec {
        CtIdentitySpec::Dyson { a } => {
            let n = a.len();
            if n == 0 {
                return Err(CtError::InvalidSpec("dyson needs at least one variable".into()));
            }
            let (mut l, mut r) = (ProductSpec::new(n, false), ProductSpec::new(n, false));
            for i in 0..n {
                for j in i + 1..n {
                    l = l.binomial(ratio(n, i, j), i64::from(a[i]));
                    r = r.binomial(ratio(n, j, i), i64::from(a[j]));
                }
            }
            let lhs = ct_number(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            let total: u64 = a.iter().map(|&v| u64::from(v)).sum();
            let mut rhs = fact(total);
            for &v in a {
                rhs /= fact(u64::from(v));
            }
            (lhs, CtValue::Number(rhs))
        }
        CtIdentitySpec::QDyson { a } => {
            let n = a.len();
            if n == 0 {
                return Err(CtError::InvalidSpec("q_dyson needs at least one variable".into()));
            }
            let (mut l, mut r) = (ProductSpec::new(n, true), ProductSpec::new(n, true));
            for i in 0..n {
                for j in i + 1..n {
                    l = l.q_shifted(ratio(n, i, j), 0, i64::from(a[i]));
                    r = r.q_shifted(ratio(n, j, i), 1, i64::from(a[j]));
                }
            }
            let lhs = ct_q(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            let parts: Vec<usize> = a.iter().map(|&v| v as usize).collect();
            (lhs, q_multinomial(parts.iter().sum(), &parts))
        }
        CtIdentitySpec::Morris { n, a, b, k } => {
            let n = *n;
            check_n(n)?;
            let (mut l, mut r) = (ProductSpec::new(n, false), ProductSpec::new(n, false));
            for j in 0..n {
                l = l.binomial(unit(n, j, 1), i64::from(*a));
                r = r.binomial(unit(n, j, -1), i64::from(*b));
            }
            for i in 0..n {
                for j in i + 1..n {
                    l = l.binomial(ratio(n, i, j), i64::from(*k));
                    r = r.binomial(ratio(n, j, i), i64::from(*k));
                }
            }
            let lhs = ct_number(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            let (a, b, k) = (u64::from(*a), u64::from(*b), u64::from(*k));
            let mut rhs = Rational::one();
            for j in 0..n as u64 {
                rhs *= fact(a + b + j * k) * fact((j + 1) * k);
                rhs /= fact(a + j * k) * fact(b + j * k) * fact(k);
            }
            (lhs, CtValue::Number(rhs))
        }
        CtIdentitySpec::QMorris { n, a, b, k } => {
            let n = *n;
            check_n(n)?;
            let (mut l, mut r) = (ProductSpec::new(n, true), ProductSpec::new(n, true));
            for j in 0..n {
                l = l.q_shifted(unit(n, j, 1), 0, i64::from(*a));
                r = r.q_shifted(unit(n, j, -1), 1, i64::from(*b));
            }
            for i in 0..n {
                for j in i + 1..n {
                    l = l.q_shifted(ratio(n, i, j), 0, i64::from(*k));
                    r = r.q_shifted(ratio(n, j, i), 1, i64::from(*k));
                }
            }
            let lhs = ct_q(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            // Gamma_q(1 + m) = (q;q)_m / (1-q)^m; the (1-q) powers cancel.
            let (a, b, k) = (*a as usize, *b as usize, *k as usize);
            let mut num = QPoly::one();
            let mut den = QPoly::one();
            for j in 0..n {
                num = num.mul(&QPoly::q_factorial(a + b + j * k)).mul(&QPoly::q_factorial((j + 1) * k));
                den = den
                    .mul(&QPoly::q_factorial(a + j * k))
                    .mul(&QPoly::q_factorial(b + j * k))
                    .mul(&QPoly::q_factorial(k));
            }
            (lhs, CtValue::q_fraction(num, den))
        }
        CtIdentitySpec::Macdonald { system, k } => {
            let n = system.dim();
            let (mut l, mut r) = (ProductSpec::new(n, false), ProductSpec::new(n, false));
            for alpha in system.positive_roots() {
                l = l.binomial(alpha.clone(), i64::from(*k));
                r = r.binomial(neg(alpha), i64::from(*k));
            }
            let lhs = ct_number(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            let mut rhs = Rational::one();
            for d in system.degrees()? {
                rhs *= Rational::from_integer(selberg_algebra::binomial(i64::from(d * k), i64::from(*k)));
            }
            (lhs, CtValue::Number(rhs))
        }
        CtIdentitySpec::QMacdonald { system, k } => {
            let n = system.dim();
            let (mut l, mut r) = (ProductSpec::new(n, true), ProductSpec::new(n, true));
            for (alpha, &s) in system.positive_roots().iter().zip(system.s_values()) {
                let s = s as i32;
                for i in 1..=*k as i32 {
                    l = l.q_shifted(alpha.clone(), (i - 1) * s + 1, 1);
                    r = r.q_shifted(neg(alpha), i * s - 1, 1);
                }
            }
            let lhs = ct_q(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
            let mut rhs = QPoly::one();
            for d in system.degrees()? {
                rhs = rhs.mul(&QPoly::q_binomial((d * k) as usize, *k as usize));
            }
            (lhs, CtValue::QFraction { num: rhs, den: QPoly::one() })
        }
        CtIdentitySpec::Bcs { n, k1, k2, k3 } => return verify_bcs_with_ceiling(*n, *k1, *k2, *k3, ceiling),
    };
    let equal = lhs.equals(&rhs);
    Ok(CtReport { spec: spec.clone(), lhs, rhs, equal })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(CtError::InvalidSpec("n must be positive".into()));
    }
    Ok(())
}

/// The BC_n product with couplings `k1` (short), `k2` (middle), `k3` (long) roots.
pub fn verify_bcs(n: usize, k1: u32, k2: u32, k3: u32) -> Result<CtReport> {
    verify_bcs_with_ceiling(n, k1, k2, k3, selberg_algebra::DEFAULT_MAX_TERMS)
}

fn verify_bcs_with_ceiling(n: usize, k1: u32, k2: u32, k3: u32, ceiling: usize) -> Result<CtReport> {
    check_n(n)?;
    let (mut l, mut r) = (ProductSpec::new(n, false), ProductSpec::new(n, false));
    for i in 0..n {
        l = l.binomial(unit(n, i, 1), i64::from(k1)).binomial(unit(n, i, 2), i64::from(k3));
        r = r.binomial(unit(n, i, -1), i64::from(k1)).binomial(unit(n, i, -2), i64::from(k3));
        for j in i + 1..n {
            let mut plus = unit(n, i, 1);
            plus[j] = 1;
            l = l.binomial(ratio(n, i, j), i64::from(k2)).binomial(plus.clone(), i64::from(k2));
            r = r.binomial(ratio(n, j, i), i64::from(k2)).binomial(neg(&plus), i64::from(k2));
        }
    }
    let lhs = ct_number(l.with_max_terms(ceiling), r.with_max_terms(ceiling))?;
    let (k1, k2, k3) = (u64::from(k1), u64::from(k2), u64::from(k3));
    let mut rhs = Rational::one();
    for i in 0..n as u64 {
        rhs *= fact(k2 + i * k2) * fact(2 * k1 + 2 * k3 + 2 * i * k2) * fact(2 * k3 + 2 * i * k2);
        rhs /= fact(k2) * fact(k1 + k3 + i * k2) * fact(k3 + i * k2) * fact(k1 + 2 * k3 + (n as u64 + i - 1) * k2);
    }
    let rhs = CtValue::Number(rhs);
    let equal = lhs.equals(&rhs);
    Ok(CtReport { spec: CtIdentitySpec::Bcs { n, k1: k1 as u32, k2: k2 as u32, k3: k3 as u32 }, lhs, rhs, equal })
}

/// Expanded Laurent polynomial of a Dyson product, for callers that need the full expansion.
pub fn dyson_product(a: &[u32]) -> Result<LaurentPoly> {
    let a: Vec<i64> = a.iter().map(|&v| i64::from(v)).collect();
    Ok(build_ct_product(&ProductSpec::dyson(&a))?)
}
