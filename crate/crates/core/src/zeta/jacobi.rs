//! Jacobi sums `j(alpha)` valued in `Z[zeta_m]`.

use crate::arith::{CyclotomicInt, PrimeField};
use crate::characters::Character;
use crate::error::{Error, Result};

/// `F_q` together with a character `chi` of exact order `m`,
/// `chi(v) = zeta_m^{dlog(v) mod m}`.
#[derive(Debug, Clone)]
pub struct JacobiContext {
    q: u64,
    m: u32,
    field: PrimeField,
    /// Indexed by residue; entry 0 is unused.
    chi_exponent: Vec<u32>,
}

impl JacobiContext {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        let field = PrimeField::new(q)?;
        if m == 0 || (q - 1) % u64::from(m) != 0 {
            return Err(Error::NotSplit { q, m: m as usize });
        }
        let chi_exponent = (0..q).map(|v| if v == 0 { 0 } else { field.dlog(v) % m }).collect();
        Ok(Self { q, m, field, chi_exponent })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Exponent of `chi(v)` as a power of `zeta_m`; `v` nonzero.
    pub fn chi_exponent(&self, v: u64) -> u32 {
        debug_assert!(v % self.q != 0);
        self.chi_exponent[(v % self.q) as usize]
    }
}

/// `j(alpha) = sum chi(v1)^a1 chi(v2)^a2 chi(v3)^a3` over nonzero `v1 + v2 + v3 = -1`.
///
/// Accumulated as exponent counts over the `(v1, v2)` plane with `v3` eliminated.
pub fn jacobi_sum(ctx: &JacobiContext, alpha: &Character) -> Result<CyclotomicInt> {
    if alpha.modulus() != ctx.m {
        return Err(Error::ConductorMismatch { left: alpha.modulus() as usize, right: ctx.m as usize });
    }
    let (q, m) = (ctx.q as usize, ctx.m as usize);
    let [_, a1, a2, a3] = alpha.entries().map(|x| x as usize);
    let weighted = |a: usize| -> Vec<usize> { ctx.chi_exponent.iter().map(|&e| e as usize * a % m).collect() };
    let (w1, w2, w3) = (weighted(a1), weighted(a2), weighted(a3));

    let mut counts = vec![0i64; m];
    for v1 in 1..q {
        // v3 = -1 - v1 - v2 = (q - 1 - v1) - v2 (mod q)
        let base = q - 1 - v1;
        for v2 in 1..q {
            let v3 = (base + q - v2) % q;
            if v3 == 0 {
                continue;
            }
            let e = w1[v1] + w2[v2] + w3[v3];
            counts[e % m] += 1;
        }
    }
    Ok(CyclotomicInt::from_counts(&counts))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::arith::Integer;
    use crate::characters::generate_characters;

    /// Triple loop over all of `(F_q^*)^3`, keeping `v1 + v2 + v3 = -1`.
    pub(crate) fn jacobi_oracle(q: u64, m: u32, alpha: &Character) -> CyclotomicInt {
        let f = PrimeField::new(q).unwrap();
        let a = alpha.entries();
        let mut counts = vec![0i64; m as usize];
        for v1 in 1..q {
            for v2 in 1..q {
                for v3 in 1..q {
                    if (v1 + v2 + v3 + 1) % q != 0 {
                        continue;
                    }
                    let e: u64 = [v1, v2, v3]
                        .iter()
                        .zip(&a[1..])
                        .map(|(&v, &ai)| u64::from(f.dlog(v)) * u64::from(ai))
                        .sum();
                    counts[(e % u64::from(m)) as usize] += 1;
                }
            }
        }
        CyclotomicInt::from_counts(&counts)
    }

    fn check(q: u64, m: u32, a: [i64; 4]) {
        let ctx = JacobiContext::new(q, m).unwrap();
        let alpha = Character::new(m, a).unwrap();
        let j = jacobi_sum(&ctx, &alpha).unwrap();
        assert_eq!(j, jacobi_oracle(q, m, &alpha));
        assert_eq!((&j * &j.complex_conj()).as_rational_integer(), Some(Integer::from(q * q)));
    }

    #[test]
    fn matches_triple_loop() {
        check(7, 3, [1, 1, 2, 2]);
        check(11, 5, [1, 1, 1, 2]);
        check(31, 15, [1, 2, 4, 8]);
    }

    #[test]
    fn norms_for_all_characters() {
        for (q, m) in [(7u64, 3u32), (11, 5), (13, 4), (13, 6)] {
            let ctx = JacobiContext::new(q, m).unwrap();
            for alpha in generate_characters(m).unwrap() {
                let j = jacobi_sum(&ctx, &alpha).unwrap();
                assert_eq!((&j * &j.complex_conj()).as_rational_integer(), Some(Integer::from(q * q)), "{alpha}");
            }
        }
    }

    #[test]
    fn context_errors() {
        assert_eq!(JacobiContext::new(7, 5).unwrap_err(), Error::NotSplit { q: 7, m: 5 });
        assert_eq!(JacobiContext::new(30, 5).unwrap_err(), Error::NotPrime(30));
        let ctx = JacobiContext::new(31, 15).unwrap();
        assert_eq!(ctx.chi_exponent(ctx.field().generator()), 1);
        let alpha = Character::new(5, [1, 1, 1, 2]).unwrap();
        assert!(jacobi_sum(&ctx, &alpha).is_err());
    }

    #[test]
    fn galois_equivariance() {
        let ctx = JacobiContext::new(11, 5).unwrap();
        for alpha in generate_characters(5).unwrap() {
            let j = jacobi_sum(&ctx, &alpha).unwrap();
            for k in [2i64, 3, 4] {
                let jk = jacobi_sum(&ctx, &alpha.scale(k as u64)).unwrap();
                assert_eq!(j.conj(k).unwrap(), jk, "alpha={alpha} k={k}");
            }
        }
    }
}
