use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: usize, right: usize },

    #[error("{k} is not a unit modulo {m}")]
    NotAUnit { k: i64, m: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus must be at least {min}, got {got}")]
    ModulusTooSmall { min: usize, got: usize },

    #[error("q = {q} is not congruent to 1 modulo m = {m}")]
    NotSplit { q: u64, m: usize },

    #[error("prime {0} is ramified for this factor pattern (out of scope)")]
    Ramified(u64),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable '{name}' at byte {offset}")]
    UnknownVariable { name: char, offset: usize },

    #[error("zero exponent at byte {offset}")]
    ZeroExponent { offset: usize },

    #[error("expected 4 monomials, found {0}")]
    MonomialCount(usize),

    #[error("monomials have unequal degrees: {0:?}")]
    UnequalDegrees(Vec<u32>),

    #[error("exponent matrix is singular: not a Delsarte covering candidate")]
    SingularMatrix,

    #[error("variable {0} divides every monomial: the polynomial is reducible")]
    CommonVariable(char),

    #[error("RDP filter failed: {h20} invariant (2,0)-classes instead of 4")]
    RdpFilterFailed { h20: usize },

    #[error("Picard number formula needs a quintic, got degree {0}")]
    NotQuintic(u32),

    #[error("polynomial not semi-invariant under the given automorphism (monomial weights {0:?})")]
    NotSemiInvariant(Vec<u64>),

    #[error("point count scale exceeded: {points} points > limit {limit}")]
    ScaleExceeded { points: u64, limit: u64 },

    #[error("malformed curve configuration at line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("curve '{0}' declared twice")]
    DuplicateCurve(String),

    #[error("unknown curve '{0}' in pairing table")]
    DanglingCurve(String),

    #[error("malformed results record at line {line}: {message}")]
    Results { line: usize, message: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
