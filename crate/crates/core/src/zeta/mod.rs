//! Jacobi sums, Frobenius characteristic polynomials, local zeta functions and
//! a point-counting oracle.

pub mod euler;
pub mod jacobi;
pub mod points;

use num_traits::Zero;

pub use euler::{
    fermat_trace_count, format_factored, ns_local_factor, ns_local_factors, orbit_jacobi_sums, transcendental_euler_factor, weil_charpoly,
};
pub use jacobi::{jacobi_sum, JacobiContext};
pub use points::{count_points, POINT_LIMIT};

use crate::arith::{CyclotomicInt, IntPolynomial, Integer};
use crate::characters::Character;
use crate::delsarte::{analyze, parse_exponent_matrix, DelsarteAnalysis};
use crate::error::{Error, Result};
use crate::MAXIMAL_QUINTIC;

/// Number of exceptional curves over the four `A_9` points of the maximal quintic.
pub const MAXIMAL_QUINTIC_EXCEPTIONAL_CURVES: u64 = 36;

/// `Z(X, T) = 1 / [(1 - T) P_NS(T) P_T(T) (1 - q^2 T)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalZeta {
    pub q: u64,
    pub ns_factors: Vec<(IntPolynomial, u32)>,
    pub ns_factor: IntPolynomial,
    pub transcendental_factor: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl LocalZeta {
    pub fn numerator(&self) -> IntPolynomial {
        IntPolynomial::one()
    }
}

pub fn is_maximal_quintic(analysis: &DelsarteAnalysis) -> bool {
    let max = parse_exponent_matrix(MAXIMAL_QUINTIC).expect("valid");
    analysis.surface.exponents().canonical() == max.exponents().canonical()
}

/// Local zeta function at a prime `q = 1 (mod m)` of a quintic Delsarte surface
/// passing the RDP filter.
///
/// For the maximal quintic the algebraic part uses [`ns_local_factor`]; for
/// other surfaces every algebraic class is assumed to be defined over `F_q`,
/// giving `(1 - qT)^rho`. At primes `q = 1 (mod 15)` both agree.
pub fn zeta_local(analysis: &DelsarteAnalysis, q: u64) -> Result<LocalZeta> {
    let rho = analysis.picard.ok_or(if analysis.surface.degree() != 5 {
        Error::NotQuintic(analysis.surface.degree())
    } else {
        Error::RdpFilterFailed { h20: analysis.h20 }
    })?;
    let transcendental_factor = transcendental_euler_factor(analysis, q)?;
    let ns_factors = if is_maximal_quintic(analysis) {
        ns_local_factors(q)?
    } else {
        vec![(IntPolynomial::one_minus(q, 1), rho)]
    };
    let powers: Vec<IntPolynomial> = ns_factors.iter().map(|(p, e)| p.pow(*e)).collect();
    let ns_factor = IntPolynomial::product(&powers);
    let denominator = IntPolynomial::product([
        &IntPolynomial::one_minus(1, 1),
        &ns_factor,
        &transcendental_factor,
        &IntPolynomial::one_minus(q * q, 1),
    ]);
    Ok(LocalZeta { q, ns_factors, ns_factor, transcendental_factor, denominator })
}

/// Both sides of the trace identity for the maximal quintic at `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub q: u64,
    /// `sum j(alpha)` over the orbit of `(1,2,4,8)`.
    pub jacobi_trace: Integer,
    /// `1 + 45 q + q^2 + jacobi_trace`: points on the resolution predicted by the zeta function.
    pub predicted: Integer,
    /// Points on the singular model `Y`.
    pub singular_count: u64,
    /// `singular_count + 36 q`: each `A_9` point replaced by a split chain of nine lines.
    pub resolved_count: Integer,
    pub orbit: Vec<(Character, CyclotomicInt)>,
}

impl TraceReport {
    pub fn matches(&self) -> bool {
        self.predicted == self.resolved_count
    }
}

/// Compares the Lefschetz trace of the local zeta function with a direct count of
/// `Y: yzw^3 + xyz^3 + wxy^3 + zwx^3 = 0` over `F_q`, corrected for the resolution.
///
/// A mismatch is reported through [`TraceReport::matches`], not as an error.
pub fn verify_resolution_trace(q: u64) -> Result<TraceReport> {
    if q < 2 || (q - 1) % 15 != 0 {
        return Err(Error::NotSplit { q, m: 15 });
    }
    let surface = parse_exponent_matrix(MAXIMAL_QUINTIC)?;
    let analysis = analyze(&surface)?;
    let orbit = orbit_jacobi_sums(&analysis.transcendental_orbits, q)?;
    let total = orbit.iter().fold(CyclotomicInt::zero(15), |acc, (_, j)| &acc + j);
    let jacobi_trace = total
        .as_rational_integer()
        .ok_or_else(|| Error::Unsupported("orbit trace is not rational".into()))?;
    let rho = u64::from(analysis.picard.expect("maximal quintic passes the RDP filter"));
    let predicted = Integer::from(1 + rho * q + q * q) + &jacobi_trace;
    let singular_count = count_points(surface.exponents(), q)?;
    let resolved_count = Integer::from(singular_count + MAXIMAL_QUINTIC_EXCEPTIONAL_CURVES * q);
    debug_assert!(!predicted.is_zero());
    Ok(TraceReport { q, jacobi_trace, predicted, singular_count, resolved_count, orbit })
}
