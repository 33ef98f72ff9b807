//! Prime fields with a discrete-log table.

use crate::error::{Error, Result};

/// Trial division; fine for the desk-scale primes used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

/// Multiplicative order of `a` modulo `n` (`gcd(a, n) = 1`).
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let a = a % n;
    let mut x = a % n;
    let mut k = 1;
    while x != 1 % n {
        x = x * a % n;
        k += 1;
        assert!(k <= n, "{a} is not a unit mod {n}");
    }
    k
}

/// Smallest positive primitive root modulo the prime `q`.
pub fn find_primitive_root(q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q == 2 {
        return Ok(1);
    }
    let factors = prime_factors(q - 1);
    Ok((2..q)
        .find(|&g| factors.iter().all(|&p| pow_mod(g, (q - 1) / p, q) != 1))
        .expect("a prime has a primitive root"))
}

/// `F_q` for prime `q`, with a generator and full discrete-log table.
#[derive(Debug, Clone)]
pub struct PrimeField {
    q: u64,
    g: u64,
    dlog: Vec<u32>,
    exp: Vec<u32>,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        let g = find_primitive_root(q)?;
        let n = (q - 1) as usize;
        let mut dlog = vec![u32::MAX; q as usize];
        let mut exp = Vec::with_capacity(n);
        let mut x = 1u64;
        for k in 0..n {
            dlog[x as usize] = k as u32;
            exp.push(x as u32);
            x = x * g % q;
        }
        Ok(Self { q, g, dlog, exp })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// Discrete log base `g` of a nonzero residue, in `0..q-1`.
    pub fn dlog(&self, x: u64) -> u32 {
        let x = (x % self.q) as usize;
        assert!(x != 0, "dlog of zero");
        self.dlog[x]
    }

    /// `g^k`.
    pub fn exp(&self, k: u64) -> u64 {
        u64::from(self.exp[(k % (self.q - 1)) as usize])
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a % self.q) % self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_roots() {
        assert_eq!(find_primitive_root(7).unwrap(), 3);
        assert_eq!(find_primitive_root(31).unwrap(), 3);
        assert_eq!(find_primitive_root(2).unwrap(), 1);
        assert_eq!(find_primitive_root(11).unwrap(), 2);
        assert_eq!(find_primitive_root(30), Err(Error::NotPrime(30)));
        assert_eq!(find_primitive_root(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn three_generates_f31() {
        // 3^15 = -1 and 3^6, 3^10 != 1
        assert_eq!(pow_mod(3, 15, 31), 30);
        assert_ne!(pow_mod(3, 6, 31), 1);
        assert_ne!(pow_mod(3, 10, 31), 1);
    }

    #[test]
    fn dlog_table_inverts_exponentiation() {
        for q in [2u64, 3, 7, 11, 31, 61, 101] {
            let f = PrimeField::new(q).unwrap();
            let g = f.generator();
            for x in 1..q {
                assert_eq!(pow_mod(g, u64::from(f.dlog(x)), q), x);
                assert_eq!(f.exp(u64::from(f.dlog(x))), x);
            }
            if q > 2 {
                assert_eq!(f.dlog(g), 1);
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(multiplicative_order(11, 5), 1);
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(31, 15), 1);
    }
}
