use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use selberg_algebra::{QPoly, Rational};

use crate::error::{CtError, Result};

/// Family of a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    A,
    B,
    C,
    D,
    BC,
    G2,
}

/// Positive roots as integer vectors in an ambient lattice, with `s(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    dim: usize,
    positive: Vec<Vec<i32>>,
    s: Vec<u32>,
}

fn unit(dim: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn combo(dim: usize, i: usize, si: i32, j: usize, sj: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] += si;
    v[j] += sj;
    v
}

impl RootSystem {
    fn build(kind: RootKind, rank: usize, dim: usize, positive: Vec<Vec<i32>>) -> Self {
        let s = positive
            .iter()
            .map(|a| {
                let half_is_root = a.iter().all(|v| v % 2 == 0) && {
                    let half: Vec<i32> = a.iter().map(|v| v / 2).collect();
                    positive.contains(&half)
                };
                if half_is_root { 2 } else { 1 }
            })
            .collect();
        RootSystem { kind, rank, dim, positive, s }
    }

    /// `A_r`: `e_i - e_j` in `r + 1` coordinates.
    pub fn a(rank: usize) -> Self {
        let n = rank + 1;
        let roots = (0..n).flat_map(|i| (i + 1..n).map(move |j| combo(n, i, 1, j, -1))).collect();
        Self::build(RootKind::A, rank, n, roots)
    }

    fn pairs(n: usize) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(combo(n, i, 1, j, -1));
                out.push(combo(n, i, 1, j, 1));
            }
        }
        out
    }

    /// `B_n`: `e_i +- e_j`, `e_i`.
    pub fn b(n: usize) -> Self {
        let mut roots = Self::pairs(n);
        roots.extend((0..n).map(|i| unit(n, i, 1)));
        Self::build(RootKind::B, n, n, roots)
    }

    /// `C_n`: `e_i +- e_j`, `2 e_i`.
    pub fn c(n: usize) -> Self {
        let mut roots = Self::pairs(n);
        roots.extend((0..n).map(|i| unit(n, i, 2)));
        Self::build(RootKind::C, n, n, roots)
    }

    /// `D_n`: `e_i +- e_j`.
    pub fn d(n: usize) -> Self {
        Self::build(RootKind::D, n, n, Self::pairs(n))
    }

    /// `BC_n`: `e_i +- e_j`, `e_i`, `2 e_i`.
    pub fn bc(n: usize) -> Self {
        let mut roots = Self::pairs(n);
        roots.extend((0..n).map(|i| unit(n, i, 1)));
        roots.extend((0..n).map(|i| unit(n, i, 2)));
        Self::build(RootKind::BC, n, n, roots)
    }

    /// `G_2` inside the plane `x_1 + x_2 + x_3 = 0`.
    pub fn g2() -> Self {
        let roots = vec![
            vec![1, -1, 0],
            vec![-1, 0, 1],
            vec![0, -1, 1],
            vec![-2, 1, 1],
            vec![1, -2, 1],
            vec![-1, -1, 2],
        ];
        Self::build(RootKind::G2, 2, 3, roots)
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates (Laurent variables).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    /// `s(alpha)` for each positive root, in the same order.
    pub fn s_values(&self) -> &[u32] {
        &self.s
    }

    pub fn is_reduced(&self) -> bool {
        self.s.iter().all(|&v| v == 1)
    }

    /// All roots `+-alpha`.
    pub fn roots(&self) -> Vec<Vec<i32>> {
        self.positive
            .iter()
            .flat_map(|a| [a.clone(), a.iter().map(|v| -v).collect()])
            .collect()
    }

    /// Positive roots that are not a sum of two positive roots.
    pub fn simple_roots(&self) -> Vec<Vec<i32>> {
        self.positive
            .iter()
            .filter(|a| {
                !self.positive.iter().any(|b| {
                    let rest: Vec<i32> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                    self.positive.contains(&rest)
                })
            })
            .cloned()
            .collect()
    }

    /// Checks that every reflection `s_alpha` maps the root set into itself.
    pub fn is_closed_under_reflections(&self) -> bool {
        let all = self.roots();
        all.iter().all(|a| {
            let aa: i32 = a.iter().map(|v| v * v).sum();
            all.iter().all(|b| {
                let ab: i32 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                if (2 * ab) % aa != 0 {
                    return false;
                }
                let c = 2 * ab / aa;
                let image: Vec<i32> = b.iter().zip(a).map(|(y, x)| y - c * x).collect();
                all.contains(&image)
            })
        })
    }

    /// Heights with respect to the simple roots, via an exact linear solve.
    pub fn heights(&self) -> Result<Vec<u32>> {
        let simple = self.simple_roots();
        if simple.len() != self.rank {
            return Err(CtError::BadRootData(format!(
                "found {} simple roots for rank {}",
                simple.len(),
                self.rank
            )));
        }
        self.positive.iter().map(|a| height_of(a, &simple)).collect()
    }

    /// Degrees of the basic invariants from the height generating function.
    pub fn degrees(&self) -> Result<Vec<u32>> {
        let heights = self.heights()?;
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for (&h, &s) in heights.iter().zip(&self.s) {
            num = num.mul(&QPoly::one_minus_q_pow((h + s) as usize));
            den = den.mul(&QPoly::one_minus_q_pow(h as usize));
        }
        let mut prod = num
            .div_exact(&den)
            .map_err(|_| CtError::BadRootData("height quotient is not a polynomial".into()))?;
        for _ in 0..self.rank {
            prod = prod.mul(&QPoly::one_minus_q_pow(1));
        }
        let mut degrees = Vec::new();
        while prod != QPoly::one() {
            let (d, c) = prod
                .coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .find(|(_, c)| !c.is_zero())
                .ok_or_else(|| CtError::BadRootData("constant factor left over".into()))?;
            if !(c.is_integer() && c.is_negative()) {
                return Err(CtError::BadRootData(format!("cannot peel 1 - t^{d}: coefficient {c}")));
            }
            prod = prod
                .div_exact(&QPoly::one_minus_q_pow(d))
                .map_err(|_| CtError::BadRootData(format!("1 - t^{d} does not divide")))?;
            degrees.push(d as u32);
            if degrees.len() > self.rank {
                return Err(CtError::BadRootData("too many degrees".into()));
            }
        }
        if degrees.len() != self.rank {
            return Err(CtError::BadRootData(format!("{} degrees for rank {}", degrees.len(), self.rank)));
        }
        degrees.sort_unstable();
        Ok(degrees)
    }
}

fn height_of(root: &[i32], simple: &[Vec<i32>]) -> Result<u32> {
    // Solve sum_j c_j simple_j = root by elimination on the dim x r system.
    let rows = root.len();
    let cols = simple.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = simple.iter().map(|s| Rational::from_integer(s[i].into())).collect();
            row.push(Rational::from_integer(root[i].into()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let lead = m[pivot_row][col].clone();
        for v in m[pivot_row].iter_mut() {
            *v /= &lead;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=cols {
                    let sub = &f * &m[pivot_row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() != cols || m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return Err(CtError::BadRootData(format!("{root:?} is not in the span of the simple roots")));
    }
    let mut h = Rational::zero();
    for (r, _) in pivots.iter().enumerate() {
        let c = &m[r][cols];
        if c.is_negative() || !c.is_integer() {
            return Err(CtError::BadRootData(format!("{root:?} has coordinate {c}")));
        }
        h += c;
    }
    if h < Rational::one() {
        return Err(CtError::BadRootData(format!("{root:?} has zero height")));
    }
    u32::try_from(h.to_integer()).map_err(|_| CtError::BadRootData("height overflow".into()))
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::A => write!(f, "A{}", self.rank),
            RootKind::B => write!(f, "B{}", self.rank),
            RootKind::C => write!(f, "C{}", self.rank),
            RootKind::D => write!(f, "D{}", self.rank),
            RootKind::BC => write!(f, "BC{}", self.rank),
            RootKind::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for RootSystem {
    type Err = CtError;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        if upper == "G2" {
            return Ok(Self::g2());
        }
        let split = upper.find(|c: char| c.is_ascii_digit()).ok_or_else(|| CtError::UnknownSystem(s.into()))?;
        let (head, tail) = upper.split_at(split);
        let rank: usize = tail.parse().map_err(|_| CtError::UnknownSystem(s.into()))?;
        if rank == 0 {
            return Err(CtError::UnknownSystem(s.into()));
        }
        match head {
            "A" => Ok(Self::a(rank)),
            "B" => Ok(Self::b(rank)),
            "C" => Ok(Self::c(rank)),
            "D" if rank >= 2 => Ok(Self::d(rank)),
            "BC" => Ok(Self::bc(rank)),
            _ => Err(CtError::UnknownSystem(s.into())),
        }
    }
}
