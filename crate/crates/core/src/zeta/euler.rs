//! Characteristic polynomials and local Euler factors.

use rayon::prelude::*;

use super::jacobi::{jacobi_sum, JacobiContext};
use crate::arith::{is_prime, multiplicative_order, CyclotomicInt, IntPolynomial, Integer};
use crate::characters::{generate_characters, Character, CharacterOrbit};
use crate::delsarte::DelsarteAnalysis;
use crate::error::{Error, Result};

/// Expands `prod (1 - r T)` for cyclotomic roots `r` and extracts integer coefficients.
fn expand_reciprocal(m: u32, roots: &[CyclotomicInt]) -> Result<IntPolynomial> {
    let mut coeffs = vec![CyclotomicInt::from_integer(m as usize, 1)];
    for r in roots {
        let mut next = coeffs.clone();
        next.push(CyclotomicInt::zero(m as usize));
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] - &(r * c);
        }
        coeffs = next.into_iter().map(|c| c.normalized()).collect();
    }
    let ints = coeffs
        .iter()
        .map(|c| {
            c.as_rational_integer()
                .ok_or_else(|| Error::Unsupported(format!("coefficient {c} is not rational")))
        })
        .collect::<Result<Vec<Integer>>>()?;
    Ok(IntPolynomial::new(ints))
}

fn jacobi_all(ctx: &JacobiContext, chars: &[Character]) -> Result<Vec<CyclotomicInt>> {
    chars.par_iter().map(|a| jacobi_sum(ctx, a)).collect()
}

/// `P(T) = (T - q) prod_alpha (T - j(alpha))`, the characteristic polynomial of
/// Frobenius on `H^2(S_m)`.
pub fn weil_charpoly(m: u32, q: u64) -> Result<IntPolynomial> {
    let ctx = JacobiContext::new(q, m)?;
    let chars = generate_characters(m)?;
    let mut roots = jacobi_all(&ctx, &chars)?;
    roots.push(CyclotomicInt::from_integer(m as usize, q));
    // prod (T - r) is the reversal of prod (1 - r T)
    let rev = expand_reciprocal(m, &roots)?;
    let mut c = rev.coeffs().to_vec();
    c.resize(roots.len() + 1, Integer::default());
    c.reverse();
    Ok(IntPolynomial::new(c))
}

/// `1 + q + q^2 + sum_alpha j(alpha)`, the point count of `S_m` predicted by Weil.
pub fn fermat_trace_count(m: u32, q: u64) -> Result<Integer> {
    let ctx = JacobiContext::new(q, m)?;
    let chars = generate_characters(m)?;
    let total = jacobi_all(&ctx, &chars)?
        .iter()
        .fold(CyclotomicInt::zero(m as usize), |acc, j| &acc + j);
    let sum = total
        .as_rational_integer()
        .ok_or_else(|| Error::Unsupported("trace of Frobenius is not rational".into()))?;
    Ok(sum + Integer::from(1 + q + q * q))
}

/// Jacobi sums over the members of the given orbits, in orbit order.
pub fn orbit_jacobi_sums(orbits: &[CharacterOrbit], q: u64) -> Result<Vec<(Character, CyclotomicInt)>> {
    let Some(first) = orbits.first() else { return Ok(Vec::new()) };
    let ctx = JacobiContext::new(q, first.representative.modulus())?;
    let chars: Vec<Character> = orbits.iter().flat_map(|o| o.members.iter().copied()).collect();
    let sums = jacobi_all(&ctx, &chars)?;
    Ok(chars.into_iter().zip(sums).collect())
}

/// `prod (1 - j(alpha) T)` over the invariant transcendental characters; degree `lambda`.
pub fn transcendental_euler_factor(analysis: &DelsarteAnalysis, q: u64) -> Result<IntPolynomial> {
    let m = u32::try_from(analysis.covering.m).expect("m fits in u32");
    if (q - 1) % u64::from(m) != 0 || !is_prime(q) {
        // report the precise failure
        JacobiContext::new(q, m)?;
    }
    let sums = orbit_jacobi_sums(&analysis.transcendental_orbits, q)?;
    let roots: Vec<CyclotomicInt> = sums.into_iter().map(|(_, j)| j).collect();
    expand_reciprocal(m.max(1), &roots)
}

/// Local factor at `q` of `zeta_Q(s-1)^39 zeta_K(s-1) zeta_L(s-1)` with `K`, `L`
/// the third and fifth cyclotomic fields, as a polynomial in `T = q^{-s}`.
pub fn ns_local_factor(q: u64) -> Result<IntPolynomial> {
    let parts = ns_local_factors(q)?;
    let powers: Vec<IntPolynomial> = parts.iter().map(|(p, e)| p.pow(*e)).collect();
    Ok(IntPolynomial::product(&powers))
}

/// [`ns_local_factor`] as `(factor, exponent)` pairs with distinct factors.
pub fn ns_local_factors(q: u64) -> Result<Vec<(IntPolynomial, u32)>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q == 3 || q == 5 {
        return Err(Error::Ramified(q));
    }
    let linear = IntPolynomial::one_minus(q, 1);
    let mut out = vec![(linear.clone(), 39u32)];
    let mut push = |p: IntPolynomial, e: u32| match out.iter_mut().find(|(f, _)| *f == p) {
        Some((_, k)) => *k += e,
        None => out.push((p, e)),
    };
    if q % 3 == 1 {
        push(linear.clone(), 2);
    } else {
        push(IntPolynomial::one_minus(q * q, 2), 1);
    }
    let f = multiplicative_order(q, 5);
    push(IntPolynomial::one_minus(Integer::from(q).pow(f as u32), f as usize), (4 / f) as u32);
    Ok(out)
}

/// `(f1)^e1 (f2)^e2 ...`, omitting exponents equal to 1.
pub fn format_factored(parts: &[(IntPolynomial, u32)]) -> String {
    if parts.is_empty() {
        return "1".into();
    }
    parts
        .iter()
        .map(|(p, e)| if *e == 1 { format!("({p})") } else { format!("({p})^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}
