//! Lefschetz and Picard numbers through the covering Fermat surface.

use super::covering::{compute_covering, FermatCovering};
use super::surface::DelsarteSurface;
use crate::characters::{
    closure_size, fermat_b2, fermat_lambda, generate_characters, orbit_decomposition, Character, CharacterOrbit,
};
use crate::error::{Error, Result};

/// `b_2` of the minimal resolution of a quintic with only rational double points.
pub const QUINTIC_B2: u32 = 53;
/// `h^{2,0}` of such a quintic.
pub const QUINTIC_PG: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelsarteAnalysis {
    pub surface: DelsarteSurface,
    pub covering: FermatCovering,
    /// Characters whose eigenspace is fixed by `G`, sorted.
    pub invariant_characters: Vec<Character>,
    /// Orbits of invariant characters that contain a `(2,0)` or `(0,2)` type.
    pub transcendental_orbits: Vec<CharacterOrbit>,
    pub lambda: u32,
    /// Invariant characters of Hodge degree 0.
    pub h20: usize,
    /// `53 - lambda`, present for quintics passing the `h20 = 4` filter.
    pub picard: Option<u32>,
}

impl DelsarteAnalysis {
    pub fn passes_rdp_filter(&self) -> bool {
        self.surface.degree() == 5 && self.h20 == QUINTIC_PG
    }
}

fn modulus(cov: &FermatCovering) -> u32 {
    u32::try_from(cov.m).expect("Fermat degree fits in u32")
}

/// `G`-invariant characters, enumerated through the dual subgroup (size `m^3 / |G|`).
pub fn invariant_characters(cov: &FermatCovering) -> Vec<Character> {
    let m = modulus(cov);
    if m < 2 {
        return Vec::new();
    }
    let mut out: Vec<Character> = cov
        .dual_subgroup()
        .elements()
        .into_iter()
        .filter_map(|t| Character::from_tail(m, [t[0], t[1], t[2]]))
        .collect();
    out.sort_unstable();
    out
}

/// Reference path: filter all of the character set by the generators of `G`.
pub fn invariant_characters_brute(cov: &FermatCovering) -> Vec<Character> {
    let m = modulus(cov);
    if m < 2 {
        return Vec::new();
    }
    let m64 = cov.m;
    let mut out: Vec<Character> = generate_characters(m)
        .expect("m >= 2")
        .into_iter()
        .filter(|c| {
            let a = c.entries();
            cov.g_generators.iter().all(|g| {
                (1..4).map(|i| u64::from(a[i]) * g.generator[i - 1]).sum::<u64>() % m64 == 0
            })
        })
        .collect();
    out.sort_unstable();
    out
}

/// Full pipeline from an exponent matrix to `lambda`, `h20` and (for quintics) `rho`.
pub fn analyze(surface: &DelsarteSurface) -> Result<DelsarteAnalysis> {
    let covering = compute_covering(surface)?;
    let invariant = invariant_characters(&covering);
    // invariance is Galois stable, so these orbits stay inside the invariant set
    let transcendental_orbits: Vec<CharacterOrbit> = orbit_decomposition(&invariant)
        .into_iter()
        .filter(CharacterOrbit::contains_transcendental_type)
        .collect();
    let lambda = closure_size(&transcendental_orbits) as u32;
    let h20 = invariant.iter().filter(|c| c.hodge_degree() == 0).count();
    let picard = (surface.degree() == 5 && h20 == QUINTIC_PG).then(|| QUINTIC_B2 - lambda);
    Ok(DelsarteAnalysis {
        surface: *surface,
        covering,
        invariant_characters: invariant,
        transcendental_orbits,
        lambda,
        h20,
        picard,
    })
}

pub fn lefschetz_number(surface: &DelsarteSurface) -> Result<u32> {
    Ok(analyze(surface)?.lambda)
}

pub fn h20_invariant_count(surface: &DelsarteSurface) -> Result<usize> {
    Ok(analyze(surface)?.h20)
}

/// `rho = 53 - lambda` for a quintic whose resolution keeps `h^{2,0} = 4`.
pub fn picard_number_quintic(surface: &DelsarteSurface) -> Result<u32> {
    if surface.degree() != 5 {
        return Err(Error::NotQuintic(surface.degree()));
    }
    let a = analyze(surface)?;
    a.picard.ok_or(Error::RdpFilterFailed { h20: a.h20 })
}

/// `rho(S_m) = b_2(S_m) - lambda(S_m)`.
pub fn picard_number_fermat(m: u32) -> Result<u64> {
    if m < 3 {
        return Err(Error::ModulusTooSmall { min: 3, got: m as usize });
    }
    Ok(fermat_b2(u64::from(m)) - fermat_lambda(m)? as u64)
}
