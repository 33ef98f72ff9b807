//! Brute-force projective point counts over prime fields.

use rayon::prelude::*;

use crate::arith::is_prime;
use crate::delsarte::ExponentMatrix;
use crate::error::{Error, Result};

/// Largest projective space (in points) we are willing to scan.
pub const POINT_LIMIT: u64 = 10_000_000;

/// Number of `F_q`-points of `sum_i prod_k x_k^{A_ik} = 0` in `P^3`, scanning
/// representatives whose first nonzero coordinate is 1.
pub fn count_points(a: &ExponentMatrix, q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let points = q * q * q + q * q + q + 1;
    if points > POINT_LIMIT {
        return Err(Error::ScaleExceeded { points, limit: POINT_LIMIT });
    }
    let rows = a.rows();
    let max_e = rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    // pow[e][x] = x^e mod q
    let pow: Vec<Vec<u64>> = (0..=max_e)
        .map(|e| (0..q).map(|x| crate::arith::field::pow_mod(x, e as u64, q)).collect())
        .collect();
    let eval = |p: [u64; 4]| -> bool {
        let mut s = 0u64;
        for r in rows {
            let mut t = 1u64;
            for k in 0..4 {
                t = t * pow[r[k] as usize][p[k] as usize] % q;
            }
            s += t;
        }
        s % q == 0
    };
    let chart = |x1: u64| -> u64 {
        let mut n = 0;
        for x2 in 0..q {
            for x3 in 0..q {
                n += u64::from(eval([1, x1, x2, x3]));
            }
        }
        n
    };
    let mut total: u64 = (0..q).into_par_iter().map(chart).sum();
    for x2 in 0..q {
        for x3 in 0..q {
            total += u64::from(eval([0, 1, x2, x3]));
        }
    }
    for x3 in 0..q {
        total += u64::from(eval([0, 0, 1, x3]));
    }
    total += u64::from(eval([0, 0, 0, 1]));
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delsarte::DelsarteSurface;

    #[test]
    fn plane_has_p2_many_points() {
        let plane = DelsarteSurface::fermat(1);
        for q in [2u64, 3, 7, 11] {
            assert_eq!(count_points(plane.exponents(), q).unwrap(), q * q + q + 1);
        }
    }

    #[test]
    fn fermat_cubic_over_f7() {
        // 1 + q + q^2 + (sum of Jacobi sums) is checked in the euler tests; here
        // only the raw scan is pinned against an affine-cone count.
        let cubic = DelsarteSurface::fermat(3);
        let q = 7u64;
        let mut cone = 0u64;
        for x in 0..q {
            for y in 0..q {
                for z in 0..q {
                    for w in 0..q {
                        let s = (x.pow(3) + y.pow(3) + z.pow(3) + w.pow(3)) % q;
                        cone += u64::from(s == 0);
                    }
                }
            }
        }
        assert_eq!(count_points(cubic.exponents(), q).unwrap(), (cone - 1) / (q - 1));
    }

    #[test]
    fn limits() {
        let s = DelsarteSurface::fermat(5);
        assert_eq!(count_points(s.exponents(), 30), Err(Error::NotPrime(30)));
        assert!(matches!(count_points(s.exponents(), 257), Err(Error::ScaleExceeded { .. })));
    }
}
