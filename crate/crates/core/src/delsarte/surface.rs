use std::fmt;

use num_traits::Zero;

use crate::arith::{IntMatrix, Integer};
use crate::error::{Error, Result};
use crate::parse::{format_monomial, parse, Monomial, PolynomialAst, VARIABLES};

/// Rows are monomials, columns are the variables `x, y, z, w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix(pub [Monomial; 4]);

impl ExponentMatrix {
    pub fn rows(&self) -> &[Monomial; 4] {
        &self.0
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(4, 4, |i, j| Integer::from(self.0[i][j]))
    }

    pub fn det(&self) -> Integer {
        self.to_int_matrix().det().expect("4x4 is square")
    }

    /// Row sums, i.e. monomial degrees.
    pub fn degrees(&self) -> [u32; 4] {
        self.0.map(|r| r.iter().sum())
    }

    /// Index of a variable dividing every monomial, if any.
    pub fn common_variable(&self) -> Option<usize> {
        (0..4).find(|&j| self.0.iter().all(|r| r[j] > 0))
    }

    /// Least matrix under simultaneous permutation of monomials and variables.
    pub fn canonical(&self) -> Self {
        let mut best: Option<[Monomial; 4]> = None;
        for perm in PERMUTATIONS.iter() {
            let mut rows = self.0.map(|r| [r[perm[0]], r[perm[1]], r[perm[2]], r[perm[3]]]);
            rows.sort_unstable();
            if best.is_none_or(|b| rows < b) {
                best = Some(rows);
            }
        }
        Self(best.expect("24 permutations"))
    }

    pub fn flatten(&self) -> [u32; 16] {
        let mut out = [0; 16];
        for (i, r) in self.0.iter().enumerate() {
            out[4 * i..4 * i + 4].copy_from_slice(r);
        }
        out
    }

    pub fn from_flat(v: &[u32]) -> Self {
        assert_eq!(v.len(), 16);
        let mut rows = [[0; 4]; 4];
        for (i, r) in rows.iter_mut().enumerate() {
            r.copy_from_slice(&v[4 * i..4 * i + 4]);
        }
        Self(rows)
    }
}

/// All 24 permutations of `0..4`, lexicographic.
pub(crate) static PERMUTATIONS: std::sync::LazyLock<Vec<[usize; 4]>> = std::sync::LazyLock::new(|| {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&i| !std::mem::replace(&mut seen[i], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
});

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.0.iter().map(format_monomial).collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// A surface in `P^3` cut out by a sum of four monic monomials of equal degree
/// whose exponent matrix is invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DelsarteSurface {
    degree: u32,
    exponents: ExponentMatrix,
}

impl DelsarteSurface {
    pub fn new(exponents: ExponentMatrix) -> Result<Self> {
        let degrees = exponents.degrees();
        if degrees.iter().any(|&d| d != degrees[0]) {
            return Err(Error::UnequalDegrees(degrees.to_vec()));
        }
        if exponents.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        if let Some(j) = exponents.common_variable() {
            return Err(Error::CommonVariable(VARIABLES[j]));
        }
        Ok(Self { degree: degrees[0], exponents })
    }

    pub fn from_ast(ast: &PolynomialAst) -> Result<Self> {
        if ast.monomials.len() != 4 {
            return Err(Error::MonomialCount(ast.monomials.len()));
        }
        let degrees = ast.degrees();
        if degrees.iter().any(|&d| d != degrees[0]) {
            return Err(Error::UnequalDegrees(degrees));
        }
        let mut rows = [[0; 4]; 4];
        rows.copy_from_slice(&ast.monomials);
        Self::new(ExponentMatrix(rows))
    }

    /// `x^d + y^d + z^d + w^d`.
    pub fn fermat(d: u32) -> Self {
        let mut rows = [[0; 4]; 4];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = d;
        }
        Self::new(ExponentMatrix(rows)).expect("Fermat matrix is invertible")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &ExponentMatrix {
        &self.exponents
    }

    pub fn to_ast(&self) -> PolynomialAst {
        PolynomialAst { monomials: self.exponents.0.to_vec() }
    }
}

impl fmt::Display for DelsarteSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.exponents, f)
    }
}

/// Parses a four-term monomial sum into its exponent matrix.
pub fn parse_exponent_matrix(text: &str) -> Result<DelsarteSurface> {
    DelsarteSurface::from_ast(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_maximal_quintic() {
        let s = parse_exponent_matrix("y*z*w^3 + x*y*z^3 + w*x*y^3 + z*w*x^3").unwrap();
        assert_eq!(s.exponents().0, [[0, 1, 1, 3], [1, 1, 3, 0], [1, 3, 0, 1], [3, 0, 1, 1]]);
        assert_eq!(s.degree(), 5);
        assert_eq!(s.exponents().det(), 75.into());
    }

    #[test]
    fn parses_fermat() {
        let s = parse_exponent_matrix("x^5+y^5+z^5+w^5").unwrap();
        assert_eq!(s, DelsarteSurface::fermat(5));
        assert_eq!(s.exponents().to_int_matrix(), IntMatrix::identity(4).scale(&5.into()));
    }

    #[test]
    fn rejections() {
        assert_eq!(parse_exponent_matrix("x^5+x^5+y^5+z^5"), Err(Error::SingularMatrix));
        assert_eq!(parse_exponent_matrix("x^5+y^5+z^5"), Err(Error::MonomialCount(3)));
        assert_eq!(parse_exponent_matrix("x^5+y^5+z^5+w^4"), Err(Error::UnequalDegrees(vec![5, 5, 5, 4])));
        assert!(matches!(parse_exponent_matrix("x^5+y^5+z^5+q^5"), Err(Error::UnknownVariable { .. })));
        // x divides every term
        assert_eq!(
            parse_exponent_matrix("x^5+x^4y+x^3z^2+xw^4"),
            Err(Error::CommonVariable('x'))
        );
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let a = parse_exponent_matrix("yzw^3+xyz^3+wxy^3+zwx^3").unwrap();
        let b = parse_exponent_matrix("zwx^3+wxy^3+xyz^3+yzw^3").unwrap();
        // swap x <-> w, y <-> z
        let c = parse_exponent_matrix("zyx^3+wzy^3+xwz^3+yxw^3").unwrap();
        let canon = a.exponents().canonical();
        assert_eq!(b.exponents().canonical(), canon);
        assert_eq!(c.exponents().canonical(), canon);
        assert_eq!(canon.canonical(), canon);
        assert_eq!(PERMUTATIONS.len(), 24);
    }
}
