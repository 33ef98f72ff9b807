//! Dense integer matrices with exact, fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Integer = BigInt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Integer::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Integer::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows<T: Copy + Into<Integer>>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| x.into()));
        }
        Self { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Integer) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// Submatrix with row `skip_r` and column `skip_c` removed.
    pub fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_r) {
            for j in (0..self.cols).filter(|&j| j != skip_c) {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Same matrix with rows and columns reordered by `perm` (new index `i` takes old `perm[i]`).
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self[(perm[i], perm[j])].clone())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<Integer> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Integer::one());
        }
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i32;
        let mut prev = Integer::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) else {
                    return Ok(Integer::zero());
                };
                for j in 0..n {
                    a.swap(idx(k, j), idx(p, j));
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = v / &prev;
                }
            }
            prev = a[idx(k, k)].clone();
        }
        let d = a[idx(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Classical adjoint: `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det()?;
                // adj is the transposed cofactor matrix
                adj[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(adj)
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let (r, c) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * c + j;
        let mut rank = 0;
        let mut prev = Integer::one();
        for col in 0..c {
            if rank == r {
                break;
            }
            let Some(p) = (rank..r).find(|&i| !a[idx(i, col)].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..c {
                    a.swap(idx(rank, j), idx(p, j));
                }
            }
            for i in rank + 1..r {
                for j in col + 1..c {
                    let v = &a[idx(i, j)] * &a[idx(rank, col)] - &a[idx(i, col)] * &a[idx(rank, j)];
                    a[idx(i, j)] = v / &prev;
                }
                a[idx(i, col)] = Integer::zero();
            }
            prev = a[idx(rank, col)].clone();
            rank += 1;
        }
        rank
    }

    /// gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> Integer {
        self.data.iter().fold(Integer::zero(), |g, x| num_integer::Integer::gcd(&g, x))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        }))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Integer> {
        self.data.iter()
    }

    pub fn max_abs(&self) -> Integer {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Integer;
    fn index(&self, (i, j): (usize, usize)) -> &Integer {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Integer {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn maximal_quintic_matrix() -> IntMatrix {
        IntMatrix::from_rows(&[
            vec![0i64, 1, 1, 3],
            vec![1, 1, 3, 0],
            vec![1, 3, 0, 1],
            vec![3, 0, 1, 1],
        ])
    }

    /// Laplace expansion along the first row; the test-side oracle.
    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let sub: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&sub)
            })
            .sum()
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMatrix::identity(4).det().unwrap(), 1.into());
        assert_eq!(IntMatrix::identity(4).scale(&5.into()).det().unwrap(), 625.into());
        let rows = vec![vec![0i64, 1, 1, 3], vec![1, 1, 3, 0], vec![1, 3, 0, 1], vec![3, 0, 1, 1]];
        assert_eq!(cofactor_det(&rows), 75);
        assert_eq!(maximal_quintic_matrix().det().unwrap(), 75.into());
    }

    #[test]
    fn det_rejects_rectangular() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert!(m.adjugate().is_err());
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = IntMatrix::from_rows(&[vec![0i64, 1], vec![1, 0]]);
        assert_eq!(m.det().unwrap(), (-1).into());
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(IntMatrix::identity(4).adjugate().unwrap(), IntMatrix::identity(4));
        let five = IntMatrix::identity(4).scale(&5.into());
        assert_eq!(five.adjugate().unwrap(), IntMatrix::identity(4).scale(&125.into()));

        let a = maximal_quintic_matrix();
        let adj = a.adjugate().unwrap();
        assert_eq!(&a * &adj, IntMatrix::identity(4).scale(&75.into()));
        assert_eq!(adj.content(), 5.into());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(maximal_quintic_matrix().rank(), 4);
        let m = IntMatrix::from_rows(&[vec![1i64, 2, 3], vec![2, 4, 6], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let m = IntMatrix::from_rows(&[vec![0i64, 0, 1], vec![0, 0, 2]]);
        assert_eq!(m.rank(), 1);
    }

    fn small_square() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..7, n), n))
    }

    proptest! {
        #[test]
        fn adjugate_identity(rows in small_square()) {
            let m = IntMatrix::from_rows(&rows);
            let det = m.det().unwrap();
            prop_assert_eq!(det.clone(), cofactor_det(&rows).into());
            let adj = m.adjugate().unwrap();
            prop_assert_eq!(&m * &adj, IntMatrix::identity(rows.len()).scale(&det));
        }

        #[test]
        fn rank_full_iff_nonzero_det(rows in small_square()) {
            let m = IntMatrix::from_rows(&rows);
            let full = m.rank() == rows.len();
            prop_assert_eq!(full, !m.det().unwrap().is_zero());
        }
    }
}
