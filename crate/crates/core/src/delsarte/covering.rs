//! The Fermat covering `S_m -> X` of a Delsarte surface and its covering group.

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use super::surface::DelsarteSurface;
use crate::arith::{canonical_generators, kernel_mod, smith_normal_form, CyclicFactor, Integer, SubgroupDecomposition};
use crate::error::{Error, Result};

/// Up to this Fermat degree the covering group is found by scanning all of `(Z/m)^3`.
pub const BRUTE_FORCE_GROUP_LIMIT: u64 = 30;

/// Data of the dominant map `phi: S_m -> X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatCovering {
    /// Fermat degree.
    pub m: u64,
    /// Row `j` holds the exponents of `s, t, u, v` in the `j`-th coordinate of `phi`.
    pub b: [[i64; 4]; 4],
    /// The shift `c` in `B = m A^{-1} + c J`.
    pub shift: i64,
    /// Rows `B_j - B_0` restricted to `t, u, v`, for `j = 1, 2, 3`.
    pub condition: [[i64; 3]; 3],
    /// Canonical generators of the covering group `G` in `(Z/m)^3`.
    pub g_generators: Vec<CyclicFactor>,
    pub g_order: u64,
    /// Invariant factors of `G`.
    pub g_invariants: Vec<u64>,
}

impl FermatCovering {
    fn condition_rows(&self) -> Vec<Vec<i64>> {
        self.condition.iter().map(|r| r.to_vec()).collect()
    }

    /// Subgroup of `(a1, a2, a3)` annihilating `G`: the span of the condition rows.
    pub fn dual_subgroup(&self) -> SubgroupDecomposition {
        smith_normal_form(&self.condition_rows(), self.m, 3)
    }

    /// `G` as an SNF kernel decomposition.
    pub fn group_decomposition(&self) -> SubgroupDecomposition {
        kernel_mod(&self.condition_rows(), self.m, 3)
    }

    /// Whether `g` fixes `phi`: all four coordinates pick up the same root of unity.
    pub fn fixes(&self, g: [u64; 3]) -> bool {
        let m = self.m as i128;
        let w = |row: &[i64; 4]| {
            (1..4).map(|k| i128::from(row[k]) * g[k - 1] as i128).sum::<i128>().rem_euclid(m)
        };
        let w0 = w(&self.b[0]);
        self.b[1..].iter().all(|r| w(r) == w0)
    }
}

/// Brute-force enumeration of the covering group; the reference oracle.
pub fn covering_group_brute(condition: &[[i64; 3]; 3], m: u64) -> Vec<[u64; 3]> {
    let mi = m as i128;
    let mut out = Vec::new();
    for g1 in 0..m {
        for g2 in 0..m {
            for g3 in 0..m {
                let g = [g1, g2, g3];
                if condition.iter().all(|r| {
                    r.iter().zip(&g).map(|(&c, &x)| i128::from(c) * x as i128).sum::<i128>().rem_euclid(mi) == 0
                }) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Computes `m`, `B` and `G` from the exponent matrix `A`.
///
/// `m` is the least positive integer with `m A^{-1}` integral; `B = m A^{-1} + c J`
/// with `c` the least shift making every entry nonnegative, so that
/// `A B = m I + c d J` and `phi` pulls `X` back to a monomial times `S_m`.
pub fn compute_covering(surface: &DelsarteSurface) -> Result<FermatCovering> {
    let a = surface.exponents().to_int_matrix();
    let det = a.det()?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let adj = a.adjugate()?;
    let abs_det = det.abs();
    let m_big = &abs_det / abs_det.gcd(&adj.content());
    let m = m_big.to_u64().expect("Fermat degree fits in u64");

    let mut minv = [[0i64; 4]; 4];
    for (i, row) in minv.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let num: Integer = &adj[(i, j)] * &m_big;
            let (q, r) = num.div_rem(&det);
            debug_assert!(r.is_zero());
            *x = q.to_i64().expect("entry fits in i64");
        }
    }
    let shift = -minv.iter().flatten().copied().min().expect("16 entries");
    let b = minv.map(|r| r.map(|x| x + shift));

    let mut condition = [[0i64; 3]; 3];
    for j in 1..4 {
        for k in 1..4 {
            condition[j - 1][k - 1] = b[j][k] - b[0][k];
        }
    }

    let rows: Vec<Vec<i64>> = condition.iter().map(|r| r.to_vec()).collect();
    let decomposition = kernel_mod(&rows, m, 3);
    let gens: Vec<Vec<u64>> = if m <= BRUTE_FORCE_GROUP_LIMIT {
        covering_group_brute(&condition, m).into_iter().map(|g| g.to_vec()).collect()
    } else {
        decomposition.factors.iter().map(|f| f.generator.clone()).collect()
    };
    let g_generators = canonical_generators(&gens, m, 3);
    let g_order = if m <= BRUTE_FORCE_GROUP_LIMIT { gens.len() as u64 } else { decomposition.order() };
    debug_assert_eq!(g_order, decomposition.order());

    Ok(FermatCovering { m, b, shift, condition, g_generators, g_order, g_invariants: decomposition.orders() })
}
