//! Partitioning schemes and shellings of relative complexes, with full
//! verification. Verifiers return the first failing clause together with a
//! witness face, in the clause order documented on each function.

use crate::face::Face;
use crate::relative::RelComplex;
use crate::vectors::HVector;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// The interval [min, max] = { τ : min ⊆ τ ⊆ max } in the face poset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Interval {
    pub min: Face,
    pub max: Face,
}

impl Interval {
    pub fn new(min: Face, max: Face) -> Interval {
        Interval { min, max }
    }

    pub fn is_well_formed(&self) -> bool {
        self.min.is_subset_of(&self.max)
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.min.is_subset_of(f) && f.is_subset_of(&self.max)
    }

    /// All 2^(|max|−|min|) faces of the interval.
    pub fn faces(&self) -> Vec<Face> {
        self.max
            .minus(&self.min)
            .subsets()
            .into_iter()
            .map(|s| s.union(&self.min))
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PartitionScheme {
    pub intervals: Vec<Interval>,
}

impl PartitionScheme {
    pub fn new(intervals: Vec<Interval>) -> PartitionScheme {
        PartitionScheme { intervals }
    }

    /// Concatenation; used when gluing two partitioned complexes.
    pub fn concat(&self, other: &PartitionScheme) -> PartitionScheme {
        let mut intervals = self.intervals.clone();
        intervals.extend(other.intervals.iter().cloned());
        PartitionScheme { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

impl fmt::Display for PartitionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊔ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShellingOrder {
    pub order: Vec<Face>,
}

impl ShellingOrder {
    pub fn new(order: Vec<Face>) -> ShellingOrder {
        ShellingOrder { order }
    }

    /// Order a first, then order b; used by shelling-like gluing.
    pub fn concat(&self, other: &ShellingOrder) -> ShellingOrder {
        let mut order = self.order.clone();
        order.extend(other.order.iter().cloned());
        ShellingOrder { order }
    }
}

impl fmt::Display for ShellingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("face {{{0}}} is not a facet of the relative complex")]
pub struct NotAFacet(pub Face);

/// All admissible interval minima below a given facet: the subsets of the
/// facet that are faces of the relative complex (i.e. not in Γ), sorted by
/// dimension and then lexicographically.
pub fn candidate_minima(rc: &RelComplex, facet: &Face) -> Result<Vec<Face>, NotAFacet> {
    if !rc.facets().contains(facet) {
        return Err(NotAFacet(facet.clone()));
    }
    let mut out: Vec<Face> = facet
        .subsets()
        .into_iter()
        .filter(|r| !rc.relative().contains(r))
        .collect();
    out.sort_by_key(|f| (f.dim(), f.clone()));
    Ok(out)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionViolation {
    #[error("interval #{index} [{min}, {max}] is malformed: min is not a subset of max")]
    MalformedInterval { index: usize, min: Face, max: Face },
    #[error("interval #{index} tops out at {{{top}}}, which is not a facet")]
    TopNotFacet { index: usize, top: Face },
    #[error("interval #{index} contains {{{face}}}, which is not a face of the relative complex")]
    FaceOutsideComplex { index: usize, face: Face },
    #[error("intervals #{first} and #{second} overlap at {{{face}}}")]
    Overlap {
        first: usize,
        second: usize,
        face: Face,
    },
    #[error("face {{{face}}} is not covered by any interval")]
    Uncovered { face: Face },
}

/// Check the four defining clauses of a partitioning scheme, in order:
/// (a) every interval top is a facet, (b) every interval face is a face of
/// the relative complex, (c) intervals are pairwise disjoint, (d) the
/// intervals cover every face. Malformed intervals are rejected first.
pub fn verify_partitioning(rc: &RelComplex, s: &PartitionScheme) -> Result<(), PartitionViolation> {
    for (index, iv) in s.intervals.iter().enumerate() {
        if !iv.is_well_formed() {
            return Err(PartitionViolation::MalformedInterval {
                index,
                min: iv.min.clone(),
                max: iv.max.clone(),
            });
        }
    }
    let facets: BTreeSet<Face> = rc.facets().into_iter().collect();
    for (index, iv) in s.intervals.iter().enumerate() {
        if !facets.contains(&iv.max) {
            return Err(PartitionViolation::TopNotFacet {
                index,
                top: iv.max.clone(),
            });
        }
    }
    let all_faces = rc.faces();
    for (index, iv) in s.intervals.iter().enumerate() {
        if let Some(face) = iv.faces().into_iter().find(|f| !all_faces.contains(f)) {
            return Err(PartitionViolation::FaceOutsideComplex { index, face });
        }
    }
    let mut owner: BTreeMap<Face, usize> = BTreeMap::new();
    for (index, iv) in s.intervals.iter().enumerate() {
        for face in iv.faces() {
            if let Some(&first) = owner.get(&face) {
                return Err(PartitionViolation::Overlap {
                    first,
                    second: index,
                    face,
                });
            }
            owner.insert(face, index);
        }
    }
    if let Some(face) = all_faces.iter().find(|f| !owner.contains_key(*f)) {
        return Err(PartitionViolation::Uncovered { face: face.clone() });
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShellingViolation {
    #[error("step {step}: {{{face}}} is not a facet of the relative complex")]
    NotAFacet { step: usize, face: Face },
    #[error("step {step}: facet {{{face}}} appears more than once")]
    DuplicateFacet { step: usize, face: Face },
    #[error("facet {{{face}}} never appears in the order")]
    MissingFacet { face: Face },
    #[error(
        "step {step}: ⟨{facet}⟩ ∩ Λ is not pure of dimension dim−1 (maximal face {{{witness}}})"
    )]
    IntersectionNotPure {
        step: usize,
        facet: Face,
        witness: Face,
    },
    #[error("step {step}: the new faces added by {{{facet}}} do not form an interval")]
    NewFacesNotInterval { step: usize, facet: Face },
}

/// Walk a claimed shelling order, producing the interval [R_j, σ_j] each step
/// contributes. Checks, per step j (Λ_0 = Γ):
///  - σ_j is a facet, listed exactly once, and all facets are listed;
///  - ⟨σ_j⟩ ∩ Λ_{j−1} is pure of dimension dim σ_j − 1 (skipped only when
///    Λ_{j−1} has no faces at all, the classical first step);
///  - the new faces ⟨σ_j⟩ ∖ Λ_{j−1} form an interval topping at σ_j.
fn shelling_intervals(
    rc: &RelComplex,
    o: &ShellingOrder,
) -> Result<Vec<Interval>, ShellingViolation> {
    let facets: BTreeSet<Face> = rc.facets().into_iter().collect();
    let mut seen: BTreeSet<Face> = BTreeSet::new();
    for (j, sigma) in o.order.iter().enumerate() {
        if !facets.contains(sigma) {
            return Err(ShellingViolation::NotAFacet {
                step: j + 1,
                face: sigma.clone(),
            });
        }
        if !seen.insert(sigma.clone()) {
            return Err(ShellingViolation::DuplicateFacet {
                step: j + 1,
                face: sigma.clone(),
            });
        }
    }
    if let Some(missing) = facets.iter().find(|f| !seen.contains(*f)) {
        return Err(ShellingViolation::MissingFacet {
            face: missing.clone(),
        });
    }

    // Λ as an explicit face set; it only ever grows. Λ_0 = Γ (empty for a
    // plain complex).
    let mut lambda: BTreeSet<Face> = rc.relative().faces().clone();
    let mut intervals = Vec::with_capacity(o.order.len());
    for (j, sigma) in o.order.iter().enumerate() {
        let subsets = sigma.subsets();
        let (inter, fresh): (Vec<Face>, Vec<Face>) =
            subsets.into_iter().partition(|t| lambda.contains(t));
        if !lambda.is_empty() {
            // Purity at exactly dim σ − 1: every maximal face of the
            // intersection must be a ridge of σ.
            let bad = inter
                .iter()
                .filter(|t| !inter.iter().any(|u| *t != u && t.is_subset_of(u)))
                .find(|t| t.dim() != sigma.dim() - 1);
            if let Some(witness) = bad {
                return Err(ShellingViolation::IntersectionNotPure {
                    step: j + 1,
                    facet: sigma.clone(),
                    witness: witness.clone(),
                });
            }
        }
        // The fresh faces must be exactly [R, σ] for a unique minimum R.
        let minimal: Vec<&Face> = fresh
            .iter()
            .filter(|t| !fresh.iter().any(|u| u != *t && u.is_subset_of(t)))
            .collect();
        let interval_ok = minimal.len() == 1 && {
            let iv = Interval::new(minimal[0].clone(), sigma.clone());
            let mut expected = iv.faces();
            expected.sort();
            let mut got = fresh.clone();
            got.sort();
            expected == got
        };
        if !interval_ok {
            return Err(ShellingViolation::NewFacesNotInterval {
                step: j + 1,
                facet: sigma.clone(),
            });
        }
        intervals.push(Interval::new(minimal[0].clone(), sigma.clone()));
        for t in fresh {
            lambda.insert(t);
        }
    }
    Ok(intervals)
}

pub fn verify_shelling(rc: &RelComplex, o: &ShellingOrder) -> Result<(), ShellingViolation> {
    shelling_intervals(rc, o).map(|_| ())
}

/// The partitioning scheme a shelling induces: interval j is the set of new
/// faces of step j. Errors if the order is not a valid shelling.
pub fn scheme_from_shelling(
    rc: &RelComplex,
    o: &ShellingOrder,
) -> Result<PartitionScheme, ShellingViolation> {
    shelling_intervals(rc, o).map(PartitionScheme::new)
}

/// Histogram of dim(min)+1 over the intervals, padded to the length of the
/// largest top's dimension + 2. For a verified scheme on a pure relative
/// complex this equals the h-vector.
pub fn interval_stats(s: &PartitionScheme) -> HVector {
    let Some(d) = s.intervals.iter().map(|iv| iv.max.dim() + 1).max() else {
        return HVector(Vec::new());
    };
    let mut hist = vec![0i64; d as usize + 1];
    for iv in &s.intervals {
        hist[(iv.min.dim() + 1) as usize] += 1;
    }
    HVector(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complex;
    use crate::vectors::h_vector;

    fn iv(min: &str, max: &str) -> Interval {
        Interval::new(Face::parse(min), Face::parse(max))
    }

    fn fig1() -> RelComplex {
        RelComplex::plain(Complex::from_strs(&["12", "34", "45", "35"]))
    }

    fn fig1_scheme() -> PartitionScheme {
        PartitionScheme::new(vec![
            iv(".", "12"),
            iv("3", "34"),
            iv("4", "45"),
            iv("5", "35"),
        ])
    }

    #[test]
    fn interval_faces() {
        let i = iv("1", "125");
        let mut fs = i.faces();
        fs.sort();
        assert_eq!(
            fs,
            vec![
                Face::parse("1"),
                Face::parse("12"),
                Face::parse("125"),
                Face::parse("15")
            ]
        );
        assert!(i.contains(&Face::parse("15")));
        assert!(!i.contains(&Face::parse("25")));
    }

    #[test]
    fn candidate_minima_examples() {
        let bowtie = RelComplex::plain(Complex::from_strs(&["125", "345"]));
        let m = candidate_minima(&bowtie, &Face::parse("125")).unwrap();
        assert_eq!(m.len(), 8);
        assert_eq!(m[0], Face::empty());

        let rel =
            RelComplex::new(Complex::from_strs(&["125"]), Complex::from_strs(&["12"])).unwrap();
        let m = candidate_minima(&rel, &Face::parse("125")).unwrap();
        assert_eq!(
            m,
            vec![
                Face::parse("5"),
                Face::parse("15"),
                Face::parse("25"),
                Face::parse("125")
            ]
        );
        assert!(candidate_minima(&rel, &Face::parse("12")).is_err());
    }

    #[test]
    fn fig1_scheme_verifies_and_counts() {
        let rc = fig1();
        let s = fig1_scheme();
        assert_eq!(verify_partitioning(&rc, &s), Ok(()));
        assert_eq!(interval_stats(&s), h_vector(&rc));
    }

    #[test]
    fn violations_report_first_failing_clause() {
        let rc = fig1();
        // single interval cannot cover a 4-facet complex
        let s = PartitionScheme::new(vec![iv(".", "12")]);
        assert!(matches!(
            verify_partitioning(&rc, &s),
            Err(PartitionViolation::Uncovered { .. })
        ));
        // top not a facet
        let s = PartitionScheme::new(vec![iv(".", "13")]);
        assert!(matches!(
            verify_partitioning(&rc, &s),
            Err(PartitionViolation::TopNotFacet { index: 0, .. })
        ));
        // overlap
        let s = PartitionScheme::new(vec![
            iv(".", "12"),
            iv("1", "12"),
            iv("3", "34"),
            iv("4", "45"),
            iv("5", "35"),
        ]);
        assert!(matches!(
            verify_partitioning(&rc, &s),
            Err(PartitionViolation::Overlap {
                first: 0,
                second: 1,
                ..
            })
        ));
        // malformed
        let s = PartitionScheme::new(vec![iv("7", "12")]);
        assert!(matches!(
            verify_partitioning(&rc, &s),
            Err(PartitionViolation::MalformedInterval { .. })
        ));
        // face outside the relative complex
        let rel =
            RelComplex::new(Complex::from_strs(&["125"]), Complex::from_strs(&["12"])).unwrap();
        let s = PartitionScheme::new(vec![iv(".", "125")]);
        assert!(matches!(
            verify_partitioning(&rel, &s),
            Err(PartitionViolation::FaceOutsideComplex { .. })
        ));
    }

    #[test]
    fn two_triangles_shelling() {
        let rc = RelComplex::plain(Complex::from_strs(&["123", "234"]));
        let o = ShellingOrder::new(vec![Face::parse("123"), Face::parse("234")]);
        assert_eq!(verify_shelling(&rc, &o), Ok(()));
        let s = scheme_from_shelling(&rc, &o).unwrap();
        assert_eq!(s.intervals, vec![iv(".", "123"), iv("4", "234")]);
        assert_eq!(verify_partitioning(&rc, &s), Ok(()));
        assert_eq!(interval_stats(&s), h_vector(&rc));
    }

    #[test]
    fn bowtie_is_not_shellable_in_any_order() {
        let rc = RelComplex::plain(Complex::from_strs(&["125", "345"]));
        for (a, b) in [("125", "345"), ("345", "125")] {
            let o = ShellingOrder::new(vec![Face::parse(a), Face::parse(b)]);
            // second triangle meets the first in the lone vertex 5: not pure dim 1
            assert!(matches!(
                verify_shelling(&rc, &o),
                Err(ShellingViolation::IntersectionNotPure { step: 2, .. })
            ));
        }
    }

    #[test]
    fn rel_empty_face_blocks_positive_dim_first_step() {
        // Γ = {∅} forces the first facet to be a vertex.
        let rc = RelComplex::rel_empty_face(Complex::from_strs(&["12", "23"]));
        let o = ShellingOrder::new(vec![Face::parse("12"), Face::parse("23")]);
        assert!(matches!(
            verify_shelling(&rc, &o),
            Err(ShellingViolation::IntersectionNotPure { step: 1, .. })
        ));
    }

    #[test]
    fn single_simplex_cases() {
        let rc = RelComplex::plain(Complex::from_strs(&["125"]));
        let o = ShellingOrder::new(vec![Face::parse("125")]);
        let s = scheme_from_shelling(&rc, &o).unwrap();
        assert_eq!(s.intervals, vec![iv(".", "125")]);
        assert_eq!(interval_stats(&s).0, vec![1, 0, 0, 0]);

        // relative to one boundary edge: min is the opposite vertex
        let rel =
            RelComplex::new(Complex::from_strs(&["125"]), Complex::from_strs(&["12"])).unwrap();
        let s = scheme_from_shelling(&rel, &o).unwrap();
        assert_eq!(s.intervals, vec![iv("5", "125")]);
    }

    #[test]
    fn missing_and_duplicate_facets_detected() {
        let rc = RelComplex::plain(Complex::from_strs(&["123", "234"]));
        let o = ShellingOrder::new(vec![Face::parse("123")]);
        assert!(matches!(
            verify_shelling(&rc, &o),
            Err(ShellingViolation::MissingFacet { .. })
        ));
        let o = ShellingOrder::new(vec![
            Face::parse("123"),
            Face::parse("123"),
            Face::parse("234"),
        ]);
        assert!(matches!(
            verify_shelling(&rc, &o),
            Err(ShellingViolation::DuplicateFacet { step: 2, .. })
        ));
    }
}
