//! Delsarte surfaces: exponent matrices, the covering Fermat surface, and
//! Picard numbers through invariant characters.

pub mod analysis;
pub mod covering;
pub mod surface;

pub use analysis::{
    analyze, h20_invariant_count, invariant_characters, invariant_characters_brute, lefschetz_number,
    picard_number_fermat, picard_number_quintic, DelsarteAnalysis, QUINTIC_B2, QUINTIC_PG,
};
pub use covering::{compute_covering, covering_group_brute, FermatCovering, BRUTE_FORCE_GROUP_LIMIT};
pub use surface::{parse_exponent_matrix, DelsarteSurface, ExponentMatrix};
