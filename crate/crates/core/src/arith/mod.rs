//! Exact integer, matrix, cyclotomic and prime-field arithmetic.

pub mod cyclotomic;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod smith;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt};
pub use field::{find_primitive_root, is_prime, multiplicative_order, PrimeField};
pub use matrix::{IntMatrix, Integer};
pub use poly::IntPolynomial;
pub use smith::{canonical_generators, kernel_mod, smith_normal_form, CyclicFactor, SubgroupDecomposition};

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    (1..=m).filter(|&k| num_integer::Integer::gcd(&k, &m) == 1).count() as u64
}

/// Units of `Z/m`, ascending.
pub fn units(m: u64) -> Vec<u64> {
    if m <= 1 {
        return vec![0];
    }
    (1..m).filter(|&k| num_integer::Integer::gcd(&k, &m) == 1).collect()
}
