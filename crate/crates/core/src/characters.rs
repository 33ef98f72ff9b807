//! Characters of the Fermat surface `S_m`: the index set of the eigenspace
//! decomposition of `H^2`, their Hodge degrees and Galois orbits.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::units;
use crate::error::{Error, Result};

/// `alpha = (a0, a1, a2, a3)` in `(Z/m)^4`, all entries nonzero, summing to 0.
/// Entries are stored as reduced representatives in `1..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    m: u32,
    a: [u32; 4],
}

impl Character {
    pub fn new(m: u32, a: [i64; 4]) -> Result<Self> {
        if m < 2 {
            return Err(Error::ModulusTooSmall { min: 2, got: m as usize });
        }
        let red = a.map(|x| x.rem_euclid(i64::from(m)) as u32);
        if red.contains(&0) {
            return Err(Error::Unsupported(format!("{a:?} has an entry divisible by {m}")));
        }
        if red.iter().map(|&x| u64::from(x)).sum::<u64>() % u64::from(m) != 0 {
            return Err(Error::Unsupported(format!("{a:?} does not sum to 0 mod {m}")));
        }
        Ok(Self { m, a: red })
    }

    /// Completes `(a1, a2, a3)` with `a0 = -(a1 + a2 + a3)`; `None` if any entry vanishes.
    pub fn from_tail(m: u32, tail: [u64; 3]) -> Option<Self> {
        let m64 = u64::from(m);
        let t = tail.map(|x| x % m64);
        if t.contains(&0) {
            return None;
        }
        let a0 = (3 * m64 - t[0] - t[1] - t[2]) % m64;
        (a0 != 0).then(|| Self { m, a: [a0 as u32, t[0] as u32, t[1] as u32, t[2] as u32] })
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> [u32; 4] {
        self.a
    }

    /// Sum of the reduced representatives: `m`, `2m` or `3m`.
    pub fn reduced_sum(&self) -> u32 {
        self.a.iter().sum()
    }

    /// `|alpha|`: `V(alpha)` has Hodge type `(2 - |alpha|, |alpha|)`.
    pub fn hodge_degree(&self) -> u8 {
        (self.reduced_sum() / self.m - 1) as u8
    }

    /// Hodge type `(2,0)` or `(0,2)`.
    pub fn is_transcendental_type(&self) -> bool {
        self.hodge_degree() != 1
    }

    /// `k * alpha`; `k` must be a unit.
    pub fn scale(&self, k: u64) -> Self {
        let m = u64::from(self.m);
        debug_assert_eq!(num_integer::Integer::gcd(&k, &m), 1);
        Self { m: self.m, a: self.a.map(|x| (u64::from(x) * k % m) as u32) }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.a;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Every character of `S_m`, in lexicographic order of `(a1, a2, a3)`.
pub fn generate_characters(m: u32) -> Result<Vec<Character>> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { min: 2, got: m as usize });
    }
    let m64 = u64::from(m);
    let mut out = Vec::with_capacity(((m64 - 1) * (m64 * m64 + 3 - 3 * m64)) as usize);
    for a1 in 1..m64 {
        for a2 in 1..m64 {
            for a3 in 1..m64 {
                if let Some(c) = Character::from_tail(m, [a1, a2, a3]) {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

/// Characters of Hodge degree 0 or 2.
pub fn transcendental_types(m: u32) -> Result<Vec<Character>> {
    Ok(generate_characters(m)?.into_iter().filter(Character::is_transcendental_type).collect())
}

pub fn in_transcendental_type_set(alpha: &Character) -> bool {
    alpha.is_transcendental_type()
}

/// `b_2(S_m) = m^3 - 4m^2 + 6m - 2`.
pub fn fermat_b2(m: u64) -> u64 {
    m * m * m + 6 * m - 4 * m * m - 2
}

/// A `(Z/m)^*`-orbit; the representative is its least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterOrbit {
    pub representative: Character,
    pub members: BTreeSet<Character>,
}

impl CharacterOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains_transcendental_type(&self) -> bool {
        self.members.iter().any(Character::is_transcendental_type)
    }

    /// Number of members of Hodge degree `d`.
    pub fn count_of_degree(&self, d: u8) -> usize {
        self.members.iter().filter(|c| c.hodge_degree() == d).count()
    }
}

pub fn galois_orbit(alpha: &Character) -> CharacterOrbit {
    let members: BTreeSet<Character> =
        units(u64::from(alpha.m)).into_iter().map(|k| alpha.scale(k)).collect();
    let representative = *members.first().expect("orbit is nonempty");
    CharacterOrbit { representative, members }
}

/// Partitions the Galois closure of `chars` into orbits, ordered by representative.
pub fn orbit_decomposition<'a>(chars: impl IntoIterator<Item = &'a Character>) -> Vec<CharacterOrbit> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in chars {
        if seen.contains(c) {
            continue;
        }
        let orbit = galois_orbit(c);
        seen.extend(orbit.members.iter().copied());
        out.push(orbit);
    }
    out.sort_by_key(|o| o.representative);
    out
}

/// Size of a Galois closure given as orbits.
pub fn closure_size(orbits: &[CharacterOrbit]) -> usize {
    orbits.iter().map(CharacterOrbit::size).sum()
}

/// `lambda(S_m)`: dimension of the transcendental lattice of the Fermat surface.
pub fn fermat_lambda(m: u32) -> Result<usize> {
    let t = transcendental_types(m)?;
    Ok(closure_size(&orbit_decomposition(&t)))
}
