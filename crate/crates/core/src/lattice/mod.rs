//! Intersection lattices of curve configurations: Gram matrices, exact
//! determinant, rank and signature, and the shipped 45-curve configuration on the
//! resolved maximal quintic.

pub mod config;

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use config::{parse_curve_config, Curve, CurveConfig};

use crate::arith::{IntMatrix, Integer};
use crate::error::{Error, Result};

/// Curve data for the resolved maximal quintic.
pub const QUINTIC45: &str = include_str!("../../data/quintic45.curves");

/// `C^2 = 2g - 2 - K.C`.
pub fn self_intersection_by_adjunction(genus: u64, k_dot_c: &Integer) -> Integer {
    Integer::from(2 * genus) - 2 - k_dot_c
}

/// The 45 curves of the shipped configuration, in file order.
pub fn build_quintic_config() -> CurveConfig {
    parse_curve_config(QUINTIC45).expect("shipped configuration parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    names: Vec<String>,
    matrix: IntMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

pub fn gram(config: &CurveConfig) -> Result<GramMatrix> {
    let n = config.len();
    let mut matrix = IntMatrix::zeros(n, n);
    for (i, c) in config.curves().iter().enumerate() {
        matrix[(i, i)] = c.self_intersection.clone();
    }
    for (a, b, v) in config.pairings() {
        let i = config.index_of(a).ok_or_else(|| Error::DanglingCurve(a.to_owned()))?;
        let j = config.index_of(b).ok_or_else(|| Error::DanglingCurve(b.to_owned()))?;
        matrix[(i, j)] = v.clone();
        matrix[(j, i)] = v.clone();
    }
    let names = config.curves().iter().map(|c| c.name.clone()).collect();
    Ok(GramMatrix { names, matrix })
}

impl GramMatrix {
    pub fn from_matrix(names: Vec<String>, matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || names.len() != matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for a {}x{} matrix",
                names.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_symmetric() {
            return Err(Error::DimensionMismatch("Gram matrix must be symmetric".into()));
        }
        Ok(Self { names, matrix })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn entry(&self, a: &str, b: &str) -> Option<&Integer> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        Some(&self.matrix[(i, j)])
    }

    pub fn det_exact(&self) -> Integer {
        det_exact(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn signature(&self) -> Signature {
        signature(self)
    }
}

pub fn det_exact(g: &GramMatrix) -> Integer {
    g.matrix.det().expect("Gram matrices are square")
}

pub fn rank(g: &GramMatrix) -> usize {
    g.matrix.rank()
}

/// Inertia by symmetric Gaussian elimination over `Q`.
///
/// Each step takes a nonzero diagonal pivot if one remains; otherwise a nonzero
/// off-diagonal entry `a_kj` is folded into the diagonal by the congruence
/// `e_k -> e_k + e_j`, which makes `a_kk = 2 a_kj`.
pub fn signature(g: &GramMatrix) -> Signature {
    let n = g.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(g.matrix[(i, j)].clone())).collect())
        .collect();
    let mut sig = Signature { positive: 0, negative: 0, zero: 0 };
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        let pivot = match live.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let hit = live.iter().find_map(|&i| {
                    live.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = hit else {
                    sig.zero += live.len();
                    break;
                };
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][i] += t;
                }
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[i][c] += t;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        if p.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        live.retain(|&i| i != pivot);
        for &r in &live {
            if a[r][pivot].is_zero() {
                continue;
            }
            let f = &a[r][pivot] / &p;
            for &c in &live {
                let t = &f * &a[pivot][c];
                a[r][c] -= t;
            }
        }
    }
    sig
}

/// Prime factorization of `|n|` by trial division, as `(prime, exponent)` pairs.
pub fn factorize(n: &Integer) -> Vec<(Integer, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = Integer::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > Integer::from(1) {
        out.push((n, 1));
    }
    out
}
