//! Picard numbers, Lefschetz numbers and zeta functions of Delsarte surfaces.
//!
//! A Delsarte surface is a surface in `P^3` cut out by a sum of four
//! monomials. Every such surface is dominated by a Fermat surface
//! `S_m: s^m + t^m + u^m + v^m = 0`, and its transcendental cohomology is the
//! part of `H^2(S_m)` fixed by the covering group. This crate computes that
//! decomposition exactly, along with the Jacobi-sum Euler factors, the
//! intersection lattice of the maximal quintic, and the enumeration of all
//! quintic Delsarte surfaces.

pub mod arith;
pub mod automorphisms;
pub mod characters;
pub mod delsarte;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod parse;
pub mod zeta;

pub use arith::{CyclotomicInt, IntMatrix, IntPolynomial, Integer, PrimeField};
pub use automorphisms::{CmVerdict, DiagonalAutomorphism};
pub use characters::{Character, CharacterOrbit};
pub use delsarte::{analyze, DelsarteAnalysis, DelsarteSurface, ExponentMatrix, FermatCovering};
pub use enumerate::CandidateRecord;
pub use error::{Error, Result};
pub use lattice::{CurveConfig, GramMatrix, Signature};
pub use parse::{parse, PolynomialAst};
pub use zeta::{LocalZeta, TraceReport};

/// The maximal quintic `yzw^3 + xyz^3 + wxy^3 + zwx^3`.
pub const MAXIMAL_QUINTIC: &str = "yzw^3+xyz^3+wxy^3+zwx^3";
