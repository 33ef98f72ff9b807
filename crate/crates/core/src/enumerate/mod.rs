//! Enumeration of Delsarte surfaces of a given degree up to permutation of
//! monomials and variables, with Picard numbers for those passing the RDP
//! filter.

pub mod results;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::delsarte::{analyze, parse_exponent_matrix, DelsarteSurface, ExponentMatrix, QUINTIC_PG};
use crate::parse::Monomial;

pub use results::{read_results, write_results, EnumerationRun, RESULTS_HEADER};

/// Reference rows `(rho, polynomial, comment, erratum)` for the quintic spectrum.
pub const QUINTIC_TABLE: &str = include_str!("../../data/quintic_table.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub rho: u32,
    pub polynomial: String,
    pub comment: String,
    /// Replacement used when `polynomial` is not a Delsarte surface.
    pub erratum: Option<String>,
}

impl GoldenRow {
    pub fn effective_polynomial(&self) -> &str {
        self.erratum.as_deref().unwrap_or(&self.polynomial)
    }
}

pub fn quintic_table() -> Vec<GoldenRow> {
    QUINTIC_TABLE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut f = l.split('\t');
            let rho = f.next().and_then(|s| s.parse().ok()).expect("golden rho");
            let polynomial = f.next().expect("golden polynomial").to_owned();
            let comment = f.next().unwrap_or("").to_owned();
            let erratum = f.next().filter(|e| !e.is_empty()).map(str::to_owned);
            GoldenRow { rho, polynomial, comment, erratum }
        })
        .collect()
}

/// All degree-`d` monomials in `x, y, z, w`, lexicographically decreasing.
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            for c in (0..=d - a - b).rev() {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CandidateStats {
    pub subsets: u64,
    pub common_variable: u64,
    pub singular: u64,
    pub duplicates: u64,
    pub candidates: u64,
}

impl fmt::Display for CandidateStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} subsets, {} with a common variable, {} singular, {} duplicates, {} candidates",
            self.subsets, self.common_variable, self.singular, self.duplicates, self.candidates
        )
    }
}

/// Canonical exponent matrices of all degree-`d` Delsarte surfaces, sorted.
///
/// A zero column forces a zero determinant, so the determinant filter also
/// enforces that every variable occurs.
pub fn candidates(d: u32) -> (Vec<ExponentMatrix>, CandidateStats) {
    let mons = monomials(d);
    let n = mons.len();
    let per_first: Vec<(BTreeSet<ExponentMatrix>, CandidateStats)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut seen = BTreeSet::new();
            let mut st = CandidateStats::default();
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        st.subsets += 1;
                        let m = ExponentMatrix([mons[i], mons[j], mons[k], mons[l]]);
                        if m.common_variable().is_some() {
                            st.common_variable += 1;
                            continue;
                        }
                        if num_traits::Zero::is_zero(&m.det()) {
                            st.singular += 1;
                            continue;
                        }
                        if !seen.insert(m.canonical()) {
                            st.duplicates += 1;
                        }
                    }
                }
            }
            (seen, st)
        })
        .collect();
    let mut all = BTreeSet::new();
    let mut stats = CandidateStats::default();
    for (set, st) in per_first {
        stats.subsets += st.subsets;
        stats.common_variable += st.common_variable;
        stats.singular += st.singular;
        stats.duplicates += st.duplicates;
        for m in set {
            if !all.insert(m) {
                stats.duplicates += 1;
            }
        }
    }
    stats.candidates = all.len() as u64;
    (all.into_iter().collect(), stats)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    /// Fewer invariant `(2,0)`-classes than `p_g`: singularities worse than RDPs.
    WorseThanRdp,
    /// Degree other than 5, so no Picard formula is applied.
    NotQuintic,
    AnalysisFailed,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::WorseThanRdp => "worse-than-rdp",
            Self::NotQuintic => "not-quintic",
            Self::AnalysisFailed => "analysis-failed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::WorseThanRdp, Self::NotQuintic, Self::AnalysisFailed].into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRecord {
    pub matrix: ExponentMatrix,
    pub m: u64,
    pub lambda: u32,
    pub h20: usize,
    pub picard: Option<u32>,
    pub flags: BTreeSet<Flag>,
}

impl CandidateRecord {
    pub fn surface(&self) -> Option<DelsarteSurface> {
        DelsarteSurface::new(self.matrix).ok()
    }
}

pub fn classify(matrix: &ExponentMatrix) -> CandidateRecord {
    let mut rec = CandidateRecord {
        matrix: *matrix,
        m: 0,
        lambda: 0,
        h20: 0,
        picard: None,
        flags: BTreeSet::new(),
    };
    let analysis = DelsarteSurface::new(*matrix).and_then(|s| analyze(&s));
    let Ok(a) = analysis else {
        rec.flags.insert(Flag::AnalysisFailed);
        return rec;
    };
    rec.m = a.covering.m;
    rec.lambda = a.lambda;
    rec.h20 = a.h20;
    rec.picard = a.picard;
    if a.surface.degree() != 5 {
        rec.flags.insert(Flag::NotQuintic);
    } else if a.h20 < QUINTIC_PG {
        rec.flags.insert(Flag::WorseThanRdp);
    }
    rec
}

/// Classifies in parallel; output order follows the input.
pub fn classify_all(matrices: &[ExponentMatrix]) -> Vec<CandidateRecord> {
    matrices.par_iter().map(classify).collect()
}

/// Picard numbers of RDP-passing records, each with its least canonical witness.
pub fn picard_spectrum(records: &[CandidateRecord]) -> BTreeMap<u32, ExponentMatrix> {
    let mut out: BTreeMap<u32, ExponentMatrix> = BTreeMap::new();
    for r in records {
        if let Some(rho) = r.picard {
            out.entry(rho).and_modify(|w| *w = (*w).min(r.matrix)).or_insert(r.matrix);
        }
    }
    out
}

/// Canonical forms of RDP-passing records with Picard number `rho`.
///
/// Equivalence is permutation of variables together with permutation of
/// monomials; torus rescalings are not considered.
pub fn uniqueness_report(records: &[CandidateRecord], rho: u32) -> Vec<ExponentMatrix> {
    let mut v: Vec<ExponentMatrix> =
        records.iter().filter(|r| r.picard == Some(rho)).map(|r| r.matrix).collect();
    v.sort();
    v.dedup();
    v
}

/// Canonical form of a four-monomial polynomial, for matching against records.
pub fn canonical_form(polynomial: &str) -> crate::Result<ExponentMatrix> {
    Ok(parse_exponent_matrix(polynomial)?.exponents().canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::Character;
    use crate::delsarte::{invariant_characters, invariant_characters_brute};
    use crate::MAXIMAL_QUINTIC;

    #[test]
    fn monomial_counts() {
        for d in 0..=7u32 {
            let n = (d + 1) * (d + 2) * (d + 3) / 6;
            assert_eq!(monomials(d).len() as u32, n);
        }
        assert_eq!(monomials(5).len(), 56);
    }

    #[test]
    fn linear_candidates() {
        let (c, st) = candidates(1);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0], DelsarteSurface::fermat(1).exponents().canonical());
        assert_eq!(st.subsets, 1);
    }

    #[test]
    fn quadric_candidates_by_hand() {
        // Nonsingular 4x4 exponent matrices of degree 2 without common variable,
        // counted up to relabelling by brute force over all 4-subsets.
        let mons = monomials(2);
        let mut forms = BTreeSet::new();
        for i in 0..mons.len() {
            for j in i + 1..mons.len() {
                for k in j + 1..mons.len() {
                    for l in k + 1..mons.len() {
                        let m = ExponentMatrix([mons[i], mons[j], mons[k], mons[l]]);
                        if DelsarteSurface::new(m).is_ok() {
                            let orbit: BTreeSet<_> = crate::delsarte::surface::PERMUTATIONS
                                .iter()
                                .map(|p| {
                                    let mut rows = m.0.map(|r| [r[p[0]], r[p[1]], r[p[2]], r[p[3]]]);
                                    rows.sort();
                                    ExponentMatrix(rows)
                                })
                                .collect();
                            forms.insert(*orbit.iter().next().unwrap());
                        }
                    }
                }
            }
        }
        let (c, _) = candidates(2);
        assert_eq!(c, forms.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn golden_table() {
        let rows = quintic_table();
        assert_eq!(rows.len(), 18);
        for row in &rows {
            let rec = classify(&canonical_form(row.effective_polynomial()).unwrap());
            assert_eq!(rec.picard, Some(row.rho), "{}", row.polynomial);
            assert_eq!(rec.h20, 4);
            assert!(rec.flags.is_empty());
            if row.erratum.is_some() {
                assert!(canonical_form(&row.polynomial).is_err(), "{}", row.polynomial);
            }
        }
    }

    #[test]
    fn erratum_is_the_only_one_monomial_repair() {
        let row = quintic_table().into_iter().find(|r| r.erratum.is_some()).unwrap();
        assert_eq!(canonical_form(&row.polynomial), Err(crate::Error::CommonVariable('w')));
        let printed = crate::parse::parse(&row.polynomial).unwrap().monomials;
        let mut repairs = BTreeSet::new();
        for i in 0..4 {
            for mono in monomials(5) {
                let mut rows = [printed[0], printed[1], printed[2], printed[3]];
                rows[i] = mono;
                if let Ok(s) = DelsarteSurface::new(ExponentMatrix(rows)) {
                    if classify(&s.exponents().canonical()).picard == Some(row.rho) {
                        repairs.insert(s.exponents().canonical());
                    }
                }
            }
        }
        let fixed = canonical_form(row.erratum.as_deref().unwrap()).unwrap();
        assert_eq!(repairs.into_iter().collect::<Vec<_>>(), vec![fixed]);
    }

    #[test]
    fn classification_examples() {
        let max = classify(&canonical_form(MAXIMAL_QUINTIC).unwrap());
        assert_eq!((max.m, max.h20, max.lambda, max.picard), (15, 4, 8, Some(45)));
        let low = classify(&canonical_form("xy^4+yz^4+zx^4+w^5").unwrap());
        assert_eq!(low.picard, Some(1));
        // x^4 y + ... with a cusp-like point: h20 drops.
        let (cands, _) = candidates(5);
        let bad = cands.iter().map(classify).find(|r| r.h20 < 4).expect("some candidate fails the filter");
        assert_eq!(bad.picard, None);
        assert!(bad.flags.contains(&Flag::WorseThanRdp));
    }

    #[test]
    fn classification_ignores_labelling() {
        let s = parse_exponent_matrix("ywx^3+zwy^3+yz^4+w^5").unwrap();
        let base = classify(&s.exponents().canonical());
        for p in crate::delsarte::surface::PERMUTATIONS.iter().step_by(5) {
            let rows = s.exponents().0.map(|r| [r[p[0]], r[p[1]], r[p[2]], r[p[3]]]);
            let m = ExponentMatrix([rows[2], rows[0], rows[3], rows[1]]);
            let r = classify(&m);
            assert_eq!((r.m, r.lambda, r.h20, r.picard), (base.m, base.lambda, base.h20, base.picard));
            assert_eq!(m.canonical(), base.matrix);
            assert_eq!(m.canonical().canonical(), m.canonical());
        }
    }

    #[test]
    fn dual_subgroup_matches_brute_force_on_a_sample() {
        let (cands, _) = candidates(5);
        let mut checked = 0;
        for m in cands.iter().step_by(97) {
            let s = DelsarteSurface::new(*m).unwrap();
            let cov = crate::delsarte::compute_covering(&s).unwrap();
            if cov.m > 25 {
                continue;
            }
            let mut fast: Vec<Character> = invariant_characters(&cov);
            let mut slow = invariant_characters_brute(&cov);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "{m}");
            checked += 1;
        }
        assert!(checked > 10, "only {checked} small-m candidates sampled");
    }
}
