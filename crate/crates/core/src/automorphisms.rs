//! Diagonal automorphisms, their eigenvalues on `H^{2,0}`, CM-types of
//! cyclotomic fields and the divisibility bound on the transcendental lattice.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{euler_phi, units};
use crate::delsarte::DelsarteSurface;
use crate::error::{Error, Result};
use crate::parse::Monomial;

/// `x_i -> zeta_n^{w_i} x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalAutomorphism {
    n: u64,
    weights: [u64; 4],
}

impl DiagonalAutomorphism {
    pub fn new(n: u64, weights: [i64; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ModulusTooSmall { min: 1, got: 0 });
        }
        let n_i = n as i64;
        Ok(Self { n, weights: weights.map(|w| w.rem_euclid(n_i) as u64) })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    pub fn monomial_weight(&self, m: &Monomial) -> u64 {
        m.iter().zip(&self.weights).map(|(&e, &w)| u64::from(e) * w).sum::<u64>() % self.n
    }

    /// The scalar `c_F` with `F(g x) = zeta^{c_F} F(x)`.
    pub fn scalar_weight(&self, surface: &DelsarteSurface) -> Result<u64> {
        let ws: Vec<u64> = surface.exponents().rows().iter().map(|m| self.monomial_weight(m)).collect();
        if ws.iter().all(|&w| w == ws[0]) {
            Ok(ws[0])
        } else {
            Err(Error::NotSemiInvariant(ws))
        }
    }
}

impl fmt::Display for DiagonalAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.weights;
        write!(f, "[ζ^{a} x, ζ^{b} y, ζ^{c} z, ζ^{d} w], ζ^{} = 1", self.n)
    }
}

/// Monomials in `x, y, z` of degree at most `k`, by degree then lexicographically.
fn chart_monomials(k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=k {
        for a in (0..=deg).rev() {
            for b in (0..=deg - a).rev() {
                out.push([a, b, deg - a - b, 0]);
            }
        }
    }
    out
}

/// Exponents `e` with `g^*(mu omega) = zeta^e mu omega` for the basis
/// `mu omega` of `H^{2,0}`, `deg mu <= d - 4`.
pub fn h20_weights(aut: &DiagonalAutomorphism, surface: &DelsarteSurface) -> Result<Vec<u64>> {
    let c_f = aut.scalar_weight(surface)?;
    let n = aut.order();
    let omega = (aut.weights.iter().sum::<u64>() + n - c_f) % n;
    let Some(k) = surface.degree().checked_sub(4) else {
        return Ok(Vec::new());
    };
    Ok(chart_monomials(k).iter().map(|m| (aut.monomial_weight(m) + omega) % n).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CmTypeCandidate {
    pub n: u64,
    pub exponents: Vec<u64>,
}

impl CmTypeCandidate {
    pub fn new(n: u64, exponents: impl IntoIterator<Item = u64>) -> Self {
        Self { n, exponents: exponents.into_iter().map(|e| e % n.max(1)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CmVerdict {
    CmType,
    /// Exponents sharing a factor with `n`: not embeddings of `Q(zeta_n)` at all.
    NonUnit(Vec<u64>),
    Duplicate(u64),
    /// `e` and `-e` both occur.
    ConjugatePair(u64),
    /// Units missing from `S ∪ -S`.
    Incomplete(Vec<u64>),
}

impl CmVerdict {
    pub fn is_cm_type(&self) -> bool {
        matches!(self, Self::CmType)
    }
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CmType => write!(f, "CM-type"),
            Self::NonUnit(v) => write!(f, "not a CM-type: non-unit exponents {v:?}"),
            Self::Duplicate(e) => write!(f, "not a CM-type: exponent {e} repeated"),
            Self::ConjugatePair(e) => write!(f, "not a CM-type: {e} and its negative both occur"),
            Self::Incomplete(v) => write!(f, "not a CM-type: units {v:?} not covered up to sign"),
        }
    }
}

pub fn cm_verdict(c: &CmTypeCandidate) -> CmVerdict {
    let n = c.n;
    let unit_set: BTreeSet<u64> = units(n).into_iter().collect();
    let non_units: Vec<u64> = c.exponents.iter().copied().filter(|e| !unit_set.contains(e)).collect();
    if !non_units.is_empty() {
        return CmVerdict::NonUnit(non_units);
    }
    let mut seen = BTreeSet::new();
    for &e in &c.exponents {
        if !seen.insert(e) {
            return CmVerdict::Duplicate(e);
        }
    }
    for &e in &seen {
        if seen.contains(&((n - e) % n)) {
            return CmVerdict::ConjugatePair(e);
        }
    }
    let missing: Vec<u64> = unit_set
        .into_iter()
        .filter(|u| !seen.contains(u) && !seen.contains(&((n - u) % n)))
        .collect();
    if missing.is_empty() {
        CmVerdict::CmType
    } else {
        CmVerdict::Incomplete(missing)
    }
}

pub fn is_cm_type(c: &CmTypeCandidate) -> bool {
    cm_verdict(c).is_cm_type()
}

/// If `phi(n) | dim T` and `rho >= rho_lower` leave exactly one feasible
/// dimension, returns `(dim T, b2 - dim T)`.
pub fn conclude_transcendental_dimension(n: u64, b2: u64, rho_lower: u64) -> Option<(u64, u64)> {
    let phi = euler_phi(n);
    let upper = b2.checked_sub(rho_lower)?;
    if phi == 0 || upper / phi != 1 {
        return None;
    }
    Some((phi, b2 - phi))
}
