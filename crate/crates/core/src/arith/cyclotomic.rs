//! Exact elements of `Z[zeta_m]`.
//!
//! Values are stored modulo `zeta^m - 1` as a length-`m` coefficient vector,
//! so adding `zeta^k` is a single increment. Comparison and extraction of
//! rational values reduce modulo the cyclotomic polynomial `Phi_m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::Integer;
use crate::error::{Error, Result};

/// Coefficients of `Phi_m`, ascending, via exact division of `x^m - 1` by
/// `Phi_d` for every proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: usize) -> Vec<Integer> {
    assert!(m >= 1);
    let mut p = vec![Integer::zero(); m + 1];
    p[0] = -Integer::one();
    p[m] = Integer::one();
    for d in (1..m).filter(|d| m % d == 0) {
        let (q, r) = div_rem_monic(&p, &cyclotomic_polynomial(d));
        debug_assert!(r.iter().all(Zero::is_zero));
        p = q;
    }
    p
}

/// Division by a monic polynomial (ascending coefficients).
fn div_rem_monic(num: &[Integer], den: &[Integer]) -> (Vec<Integer>, Vec<Integer>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut r = num.to_vec();
    if r.len() <= dd {
        return (vec![Integer::zero()], r);
    }
    let mut q = vec![Integer::zero(); r.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = std::mem::take(&mut r[i]);
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate().take(dd) {
            r[i - dd + j] -= &c * dj;
        }
        q[i - dd] = c;
    }
    r.truncate(dd);
    (q, r)
}

fn euler_phi(m: usize) -> usize {
    (1..=m).filter(|&k| num_integer::Integer::gcd(&k, &m) == 1).count()
}

#[derive(Clone)]
pub struct CyclotomicInt {
    m: usize,
    coeffs: Vec<Integer>,
}

impl CyclotomicInt {
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1, "conductor must be positive");
        Self { m, coeffs: vec![Integer::zero(); m] }
    }

    pub fn from_integer(m: usize, n: impl Into<Integer>) -> Self {
        let mut x = Self::zero(m);
        x.coeffs[0] = n.into();
        x
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(m: usize, k: i64) -> Self {
        let mut x = Self::zero(m);
        x.coeffs[k.rem_euclid(m as i64) as usize] = Integer::one();
        x
    }

    /// Builds `sum counts[i] zeta^i`; `counts.len()` is the conductor.
    pub fn from_counts(counts: &[i64]) -> Self {
        Self { m: counts.len(), coeffs: counts.iter().map(|&c| c.into()).collect() }
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty());
        Self { m: coeffs.len(), coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.m
    }

    /// Raw coefficients modulo `zeta^m - 1`.
    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::ConductorMismatch { left: self.m, right: other.m })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.m;
        let mut out = vec![Integer::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + j) % m] += a * b;
            }
        }
        Ok(Self { m, coeffs: out })
    }

    /// Galois conjugation `zeta -> zeta^k`; `k` must be a unit mod `m`.
    pub fn conj(&self, k: i64) -> Result<Self> {
        let m = self.m as i64;
        let k = k.rem_euclid(m);
        if num_integer::Integer::gcd(&k, &m) != 1 && m > 1 {
            return Err(Error::NotAUnit { k, m: self.m });
        }
        let mut out = vec![Integer::zero(); self.m];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(i as i64 * k % m) as usize] += c;
        }
        Ok(Self { m: self.m, coeffs: out })
    }

    /// Complex conjugate, `conj(-1)`.
    pub fn complex_conj(&self) -> Self {
        self.conj(-1).expect("-1 is always a unit")
    }

    /// Canonical form: remainder modulo `Phi_m`, padded back to length `m`.
    pub fn normalized(&self) -> Self {
        let phi = cyclotomic_polynomial(self.m);
        let (_, r) = div_rem_monic(&self.coeffs, &phi);
        let mut coeffs = r;
        coeffs.resize(self.m, Integer::zero());
        Self { m: self.m, coeffs }
    }

    /// Coordinates in the power basis `1, zeta, ..., zeta^(phi(m)-1)`.
    pub fn power_basis(&self) -> Vec<Integer> {
        let mut c = self.normalized().coeffs;
        c.truncate(euler_phi(self.m));
        c
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(n)` iff the value is the rational integer `n`.
    pub fn as_rational_integer(&self) -> Option<Integer> {
        let n = self.normalized();
        n.coeffs[1..].iter().all(Zero::is_zero).then(|| n.coeffs[0].clone())
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl Eq for CyclotomicInt {}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.try_add(rhs).expect("conductor mismatch")
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.try_sub(rhs).expect("conductor mismatch")
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.try_mul(rhs).expect("conductor mismatch")
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints the canonical power-basis form, e.g. `3 - 2*z15^4`.
impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.power_basis();
        let mut first = true;
        for (i, c) in basis.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = c < &Integer::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z{}", self.m)?,
                (1, false) => write!(f, "{mag}*z{}", self.m)?,
                (_, true) => write!(f, "z{}^{i}", self.m)?,
                (_, false) => write!(f, "{mag}*z{}^{i}", self.m)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
