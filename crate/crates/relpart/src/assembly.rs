//! Composition toolkit: glue two partitioned relative complexes, glue in the
//! shelling-like way, transfer schemes across poset isomorphisms, fold
//! schemes through quotient maps, and cut a surface open along a locus.
//!
//! Every operation validates its preconditions eagerly and re-verifies its
//! output; nothing here trusts the caller.

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;
use crate::relative::{RelComplex, RelativeError};
use crate::scheme::{
    scheme_from_shelling, verify_partitioning, verify_shelling, Interval, PartitionScheme,
    PartitionViolation, ShellingOrder, ShellingViolation,
};
use crate::search::{
    decide_partitionable, find_shelling, Decision, SearchConfig, ShellingDecision,
};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("input scheme does not verify: {0}")]
    SchemeInvalid(#[from] PartitionViolation),
    #[error("input shelling does not verify: {0}")]
    ShellingInvalid(#[from] ShellingViolation),
    #[error("facet {{{small}}} is properly contained in facet {{{large}}} of the other complex")]
    FacetContainment { small: Face, large: Face },
    #[error("G1 violated: {{{0}}} lies in both total complexes but in neither relative part")]
    G1Violation(Face),
    #[error("G2 violated: Σ is not downward closed at {{{face}}}: subset {{{missing}}} is absent")]
    G2NotSubcomplex { face: Face, missing: Face },
    #[error("shelling-like precondition violated: {{{0}}} lies in Δa ∩ Γb but not in Γa")]
    SubsetPrecondition(Face),
    #[error("the glued-on complex carries no scheme and none could be found for it")]
    AddendNotPartitionable,
    #[error(transparent)]
    Relative(#[from] RelativeError),
    #[error("not a poset isomorphism: witnesses {{{a}}} and {{{b}}}")]
    NotAPosetIsomorphism { a: Face, b: Face },
    #[error("vertex map is not total: {0} has no image")]
    NotSimplicial(Label),
    #[error("face {{{0}}} collapses under the vertex map (dimension not preserved)")]
    Degenerate(Face),
    #[error("F1 violated: relative faces {{{a}}} and {{{b}}} share the image {{{image}}}")]
    F1Violation { a: Face, b: Face, image: Face },
    #[error("F2 violated: relative facet {{{facet}}} maps to {{{image}}}, which is not a relative facet of the target")]
    F2Violation { facet: Face, image: Face },
    #[error("induced relative part Γ′ is not downward closed at {{{face}}}: subset {{{missing}}} escapes it")]
    TargetRelativeNotClosed { face: Face, missing: Face },
    #[error("combined scheme failed verification: {0}")]
    CombinedSchemeInvalid(PartitionViolation),
    #[error("combined shelling failed verification: {0}")]
    CombinedShellingInvalid(ShellingViolation),
    #[error("cut requires a pure 2-dimensional complex")]
    CutComplexNotSurface,
    #[error("cut locus must be pure 1-dimensional")]
    LocusDimension,
    #[error("locus edge {{{0}}} is not an edge of the complex")]
    LocusNotSubcomplex(Face),
}

/// A relative complex together with a verified scheme (and possibly a
/// shelling that induces it).
#[derive(Clone, Debug)]
pub struct Partitioned {
    pub complex: RelComplex,
    pub scheme: PartitionScheme,
    pub shelling: Option<ShellingOrder>,
}

impl Partitioned {
    pub fn new(
        complex: RelComplex,
        scheme: PartitionScheme,
        shelling: Option<ShellingOrder>,
    ) -> Result<Partitioned, AssemblyError> {
        verify_partitioning(&complex, &scheme)?;
        if let Some(o) = &shelling {
            verify_shelling(&complex, o)?;
        }
        Ok(Partitioned {
            complex,
            scheme,
            shelling,
        })
    }

    /// Shell a relative complex and carry the induced scheme. Panics if the
    /// order is invalid — callers pass orders they trust; use `new` otherwise.
    pub fn from_shelling(complex: RelComplex, shelling: ShellingOrder) -> Partitioned {
        let scheme = scheme_from_shelling(&complex, &shelling)
            .expect("shelling order must be valid for the complex");
        Partitioned {
            complex,
            scheme,
            shelling: Some(shelling),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GlueResult {
    pub combined: RelComplex,
    pub scheme: PartitionScheme,
    pub shelling: Option<ShellingOrder>,
}

impl GlueResult {
    pub fn into_partitioned(self) -> Partitioned {
        Partitioned {
            complex: self.combined,
            scheme: self.scheme,
            shelling: self.shelling,
        }
    }
}

/// No facet of either total complex may be properly contained in a facet of
/// the other; otherwise it would stop being a facet of the union.
fn check_facet_containment(da: &Complex, db: &Complex) -> Result<(), AssemblyError> {
    for fa in da.facets() {
        for fb in db.facets() {
            if fa != fb && fa.is_subset_of(fb) {
                return Err(AssemblyError::FacetContainment {
                    small: fa.clone(),
                    large: fb.clone(),
                });
            }
            if fb != fa && fb.is_subset_of(fa) {
                return Err(AssemblyError::FacetContainment {
                    small: fb.clone(),
                    large: fa.clone(),
                });
            }
        }
    }
    Ok(())
}

fn check_downward_closed(faces: &BTreeSet<Face>) -> Option<(Face, Face)> {
    for f in faces {
        for r in f.ridges() {
            if !faces.contains(&r) {
                return Some((f.clone(), r));
            }
        }
    }
    None
}

/// Glue two partitioned relative complexes along the conditions
///   (G1) Γa ∪ Γb ⊇ Δa ∩ Δb, and
///   (G2) Σ := (Γa∖Δb) ∪ (Γb∖Δa) ∪ (Γa∩Γb) is a complex,
/// plus the mutual facet-containment condition. The result is
/// (Δa ∪ Δb, Σ) carrying the concatenated scheme, re-verified.
pub fn glue(a: &Partitioned, b: &Partitioned) -> Result<GlueResult, AssemblyError> {
    verify_partitioning(&a.complex, &a.scheme)?;
    verify_partitioning(&b.complex, &b.scheme)?;
    let (da, ga) = (a.complex.total(), a.complex.relative());
    let (db, gb) = (b.complex.total(), b.complex.relative());
    check_facet_containment(da, db)?;

    let meet = da.intersection(db);
    if let Some(w) = meet
        .faces()
        .iter()
        .find(|f| !ga.contains(f) && !gb.contains(f))
    {
        return Err(AssemblyError::G1Violation(w.clone()));
    }

    let mut sigma: BTreeSet<Face> = BTreeSet::new();
    for f in ga.faces() {
        if !db.contains(f) || gb.contains(f) {
            sigma.insert(f.clone());
        }
    }
    for f in gb.faces() {
        if !da.contains(f) {
            sigma.insert(f.clone());
        }
    }
    if let Some((face, missing)) = check_downward_closed(&sigma) {
        return Err(AssemblyError::G2NotSubcomplex { face, missing });
    }

    let combined = RelComplex::new(da.union(db), Complex::closure(sigma.into_iter().collect()))?;
    let scheme = a.scheme.concat(&b.scheme);
    verify_partitioning(&combined, &scheme).map_err(AssemblyError::CombinedSchemeInvalid)?;
    Ok(GlueResult {
        combined,
        scheme,
        shelling: None,
    })
}

/// Shelling-like gluing: attach (b_total, b_gamma) to a partitioned complex a
/// by partitioning the auxiliary pair Φb = (b_total, (Δa ∩ b_total) ∪ Γb).
/// Preconditions: Δa ∩ Γb ⊆ Γa and the facet-containment condition. The
/// result is (Δa ∪ Δb, Γa ∪ Γb); when a carries a shelling and Φb gets one,
/// their concatenation is a shelling of the result (re-verified).
///
/// `b_scheme` must verify against Φb when supplied; when absent, a shelling
/// of Φb is searched for, falling back to the generic partition search.
pub fn glue_shelling_like(
    a: &Partitioned,
    b_total: &Complex,
    b_gamma: &Complex,
    b_scheme: Option<&PartitionScheme>,
    b_shelling: Option<&ShellingOrder>,
) -> Result<GlueResult, AssemblyError> {
    verify_partitioning(&a.complex, &a.scheme)?;
    if let Some(o) = &a.shelling {
        verify_shelling(&a.complex, o)?;
    }
    let (da, ga) = (a.complex.total(), a.complex.relative());
    check_facet_containment(da, b_total)?;

    let meet = da.intersection(b_total);
    if let Some(w) = meet
        .faces()
        .iter()
        .find(|f| b_gamma.contains(f) && !ga.contains(f))
    {
        return Err(AssemblyError::SubsetPrecondition(w.clone()));
    }

    let phi_b = RelComplex::new(b_total.clone(), meet.union(b_gamma))?;

    let (scheme_b, shelling_b) = match (b_scheme, b_shelling) {
        (Some(s), sh) => {
            verify_partitioning(&phi_b, s)?;
            if let Some(o) = sh {
                verify_shelling(&phi_b, o)?;
            }
            (s.clone(), sh.cloned())
        }
        (None, sh) => {
            if let Some(o) = sh {
                let s = scheme_from_shelling(&phi_b, o)?;
                (s, Some(o.clone()))
            } else {
                match find_shelling(&phi_b) {
                    Ok(ShellingDecision::Found(o)) => {
                        let s =
                            scheme_from_shelling(&phi_b, &o).expect("found shelling must convert");
                        (s, Some(o))
                    }
                    _ => match decide_partitionable(&phi_b, &SearchConfig::default()) {
                        Ok(Decision::Found(s)) => (s, None),
                        _ => return Err(AssemblyError::AddendNotPartitionable),
                    },
                }
            }
        }
    };

    let combined = RelComplex::new(da.union(b_total), ga.union(b_gamma))?;
    let scheme = a.scheme.concat(&scheme_b);
    verify_partitioning(&combined, &scheme).map_err(AssemblyError::CombinedSchemeInvalid)?;
    let shelling = match (&a.shelling, &shelling_b) {
        (Some(oa), Some(ob)) => {
            let o = oa.concat(ob);
            verify_shelling(&combined, &o).map_err(AssemblyError::CombinedShellingInvalid)?;
            Some(o)
        }
        _ => None,
    };
    Ok(GlueResult {
        combined,
        scheme,
        shelling,
    })
}

/// Carry a scheme across an inclusion-preserving face bijection. The map must
/// cover every face of the source, hit every face of the target exactly once,
/// and preserve inclusion in both directions.
pub fn transfer_scheme(
    iso: &BTreeMap<Face, Face>,
    source: &RelComplex,
    scheme: &PartitionScheme,
    target: &RelComplex,
) -> Result<PartitionScheme, AssemblyError> {
    verify_partitioning(source, scheme)?;
    let src_faces = source.faces();
    let tgt_faces = target.faces();
    for f in src_faces {
        let Some(img) = iso.get(f) else {
            return Err(AssemblyError::NotAPosetIsomorphism {
                a: f.clone(),
                b: f.clone(),
            });
        };
        if !tgt_faces.contains(img) {
            return Err(AssemblyError::NotAPosetIsomorphism {
                a: f.clone(),
                b: img.clone(),
            });
        }
    }
    let mut seen: BTreeMap<&Face, &Face> = BTreeMap::new();
    for f in src_faces {
        let img = &iso[f];
        if let Some(prev) = seen.insert(img, f) {
            return Err(AssemblyError::NotAPosetIsomorphism {
                a: prev.clone(),
                b: f.clone(),
            });
        }
    }
    if let Some(unhit) = tgt_faces.iter().find(|t| !seen.contains_key(t)) {
        return Err(AssemblyError::NotAPosetIsomorphism {
            a: unhit.clone(),
            b: unhit.clone(),
        });
    }
    for f in src_faces {
        for g in src_faces {
            if f.is_subset_of(g) != iso[f].is_subset_of(&iso[g]) {
                return Err(AssemblyError::NotAPosetIsomorphism {
                    a: f.clone(),
                    b: g.clone(),
                });
            }
        }
    }
    let mapped = PartitionScheme::new(
        scheme
            .intervals
            .iter()
            .map(|iv| Interval::new(iso[&iv.min].clone(), iso[&iv.max].clone()))
            .collect(),
    );
    verify_partitioning(target, &mapped).map_err(AssemblyError::CombinedSchemeInvalid)?;
    Ok(mapped)
}

/// A validated folding map: a vertex map that is simplicial and
/// dimension-preserving on the source, bijective on relative faces (F1), and
/// sends relative facets to relative facets (F2). The target pair is
/// (Δ′, Γ′) with Δ′ the image complex and Γ′ = Δ′ ∖ φ(Δ∖Γ).
#[derive(Clone, Debug)]
pub struct FoldingMap {
    source: RelComplex,
    target: RelComplex,
    vertex_map: BTreeMap<Label, Label>,
}

impl FoldingMap {
    pub fn source(&self) -> &RelComplex {
        &self.source
    }

    pub fn target(&self) -> &RelComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Label, Label> {
        &self.vertex_map
    }

    pub fn apply(&self, f: &Face) -> Face {
        f.map(&|v| self.vertex_map[v].clone())
    }
}

pub fn make_folding_map(
    source: &RelComplex,
    vertex_map: &BTreeMap<Label, Label>,
) -> Result<FoldingMap, AssemblyError> {
    for v in source.total().vertices() {
        if !vertex_map.contains_key(&v) {
            return Err(AssemblyError::NotSimplicial(v));
        }
    }
    let apply = |f: &Face| f.map(&|v| vertex_map[v].clone());

    // Dimension preservation face by face.
    for f in source.total().faces() {
        if apply(f).dim() != f.dim() {
            return Err(AssemblyError::Degenerate(f.clone()));
        }
    }

    let image_total = source.total().map_vertices(&|v| vertex_map[v].clone());

    // F1: injectivity on the relative faces Δ∖Γ.
    let mut preimage: BTreeMap<Face, &Face> = BTreeMap::new();
    for f in source.faces() {
        let img = apply(f);
        if let Some(prev) = preimage.get(&img) {
            return Err(AssemblyError::F1Violation {
                a: (*prev).clone(),
                b: f.clone(),
                image: img,
            });
        }
        preimage.insert(img, f);
    }

    // Γ′ = Δ′ ∖ φ(Δ∖Γ) must itself be downward closed.
    let gamma_faces: BTreeSet<Face> = image_total
        .faces()
        .iter()
        .filter(|f| !preimage.contains_key(*f))
        .cloned()
        .collect();
    if let Some((face, missing)) = check_downward_closed(&gamma_faces) {
        return Err(AssemblyError::TargetRelativeNotClosed { face, missing });
    }
    let target = RelComplex::new(
        image_total,
        Complex::closure(gamma_faces.into_iter().collect()),
    )?;

    // F2: relative facets map onto relative facets.
    let target_facets: BTreeSet<Face> = target.facets().into_iter().collect();
    for facet in source.facets() {
        let img = apply(&facet);
        if !target_facets.contains(&img) {
            return Err(AssemblyError::F2Violation { facet, image: img });
        }
    }

    Ok(FoldingMap {
        source: source.clone(),
        target,
        vertex_map: vertex_map.clone(),
    })
}

/// Push a scheme through a folding map: intervals map to intervals
/// [φ(R), φ(σ)], and the image scheme partitions the target.
pub fn fold_scheme(m: &FoldingMap, s: &PartitionScheme) -> Result<PartitionScheme, AssemblyError> {
    verify_partitioning(&m.source, s)?;
    let mapped = PartitionScheme::new(
        s.intervals
            .iter()
            .map(|iv| Interval::new(m.apply(&iv.min), m.apply(&iv.max)))
            .collect(),
    );
    verify_partitioning(&m.target, &mapped).map_err(AssemblyError::CombinedSchemeInvalid)?;
    Ok(mapped)
}

/// A complex cut open along a locus, with the vertex map folding it back.
#[derive(Clone, Debug)]
pub struct CutResult {
    pub complex: Complex,
    pub fold_back: BTreeMap<Label, Label>,
}

/// Cut a pure 2-complex along a 1-dimensional locus of edges. Every locus
/// vertex is replicated once per sector (connected component of its incident
/// triangles under adjacency through non-locus edges at that vertex), and
/// triangles are rewritten to the sector copies; locus edges thereby get one
/// lift per incident triangle. Sectors are numbered in order of their
/// lexicographically smallest triangle, and a vertex with a single sector
/// keeps its original label.
pub fn cut(c: &Complex, locus: &Complex) -> Result<CutResult, AssemblyError> {
    if c.dim() != Some(2) || !c.is_pure() {
        return Err(AssemblyError::CutComplexNotSurface);
    }
    if locus.dim() != Some(1) || !locus.is_pure() {
        return Err(AssemblyError::LocusDimension);
    }
    let locus_edges: BTreeSet<&Face> = locus.facets().iter().collect();
    for e in &locus_edges {
        if !c.contains(e) {
            return Err(AssemblyError::LocusNotSubcomplex((*e).clone()));
        }
    }

    let triangles: Vec<Face> = c.facets().iter().cloned().collect();
    let mut sector_of: BTreeMap<(Label, Face), u32> = BTreeMap::new();
    let mut sector_count: BTreeMap<Label, u32> = BTreeMap::new();

    for v in locus.vertices() {
        let tv: Vec<&Face> = triangles.iter().filter(|t| t.contains(&v)).collect();
        // Adjacency through shared non-locus edges containing v.
        let adjacent = |t1: &Face, t2: &Face| -> bool {
            let shared = t1.intersection(t2);
            if shared.dim() != 1 || !shared.contains(&v) {
                return false;
            }
            !locus_edges.contains(&shared)
        };
        let mut sector: Vec<Option<u32>> = vec![None; tv.len()];
        let mut next = 0u32;
        for i in 0..tv.len() {
            if sector[i].is_some() {
                continue;
            }
            let label = next;
            next += 1;
            let mut stack = vec![i];
            sector[i] = Some(label);
            while let Some(k) = stack.pop() {
                for j in 0..tv.len() {
                    if sector[j].is_none() && adjacent(tv[k], tv[j]) {
                        sector[j] = Some(label);
                        stack.push(j);
                    }
                }
            }
        }
        for (i, t) in tv.iter().enumerate() {
            sector_of.insert((v.clone(), (*t).clone()), sector[i].unwrap());
        }
        sector_count.insert(v.clone(), next);
    }

    let rename = |v: &Label, t: &Face| -> Label {
        match sector_count.get(v) {
            Some(&n) if n > 1 => Label::indexed(v, sector_of[&(v.clone(), t.clone())]),
            _ => v.clone(),
        }
    };

    let mut fold_back: BTreeMap<Label, Label> = BTreeMap::new();
    let mut new_triangles = Vec::with_capacity(triangles.len());
    for t in &triangles {
        let mut vs = Vec::with_capacity(3);
        for v in t.vertices() {
            let nv = rename(v, t);
            fold_back.insert(nv.clone(), v.clone());
            vs.push(nv);
        }
        new_triangles.push(Face::new(vs));
    }

    Ok(CutResult {
        complex: Complex::closure(new_triangles),
        fold_back,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::interval_stats;
    use crate::vectors::h_vector;

    fn iv(min: &str, max: &str) -> Interval {
        Interval::new(Face::parse(min), Face::parse(max))
    }

    fn plain_partitioned(strs: &[&str], order: &[&str]) -> Partitioned {
        let rc = RelComplex::plain(Complex::from_strs(strs));
        let o = ShellingOrder::new(order.iter().map(|s| Face::parse(s)).collect());
        Partitioned::from_shelling(rc, o)
    }

    #[test]
    fn glue_two_triangles_like_a_shelling_step() {
        let a = plain_partitioned(&["123"], &["123"]);
        let b = Partitioned::new(
            RelComplex::new(Complex::from_strs(&["234"]), Complex::from_strs(&["23"])).unwrap(),
            PartitionScheme::new(vec![iv("4", "234")]),
            None,
        )
        .unwrap();
        let glued = glue(&a, &b).unwrap();
        assert_eq!(glued.combined.total(), &Complex::from_strs(&["123", "234"]));
        assert!(glued.combined.relative().is_void());
        assert_eq!(glued.scheme.intervals, vec![iv(".", "123"), iv("4", "234")]);
    }

    #[test]
    fn glue_rejects_facet_containment_and_g1() {
        let a = plain_partitioned(&["123"], &["123"]);
        let b = plain_partitioned(&["12"], &["12"]);
        assert!(matches!(
            glue(&a, &b),
            Err(AssemblyError::FacetContainment { .. })
        ));

        let b = plain_partitioned(&["234"], &["234"]);
        assert!(matches!(glue(&a, &b), Err(AssemblyError::G1Violation(_))));
    }

    #[test]
    fn glue_with_void_partner_is_identity() {
        let a = plain_partitioned(&["123"], &["123"]);
        let b = Partitioned::new(
            RelComplex::plain(Complex::void()),
            PartitionScheme::default(),
            None,
        )
        .unwrap();
        let glued = glue(&a, &b).unwrap();
        assert_eq!(&glued.combined, &a.complex);
        assert_eq!(glued.scheme, a.scheme);
    }

    #[test]
    fn glue_h_additivity_on_pure_equal_dim() {
        // two relative triangles glued along their shared boundary edge
        let a = Partitioned::new(
            RelComplex::new(
                Complex::from_strs(&["123"]),
                Complex::from_strs(&["12", "13"]),
            )
            .unwrap(),
            PartitionScheme::new(vec![iv("23", "123")]),
            None,
        )
        .unwrap();
        let b = Partitioned::new(
            RelComplex::new(
                Complex::from_strs(&["234"]),
                Complex::from_strs(&["24", "34", "23"]),
            )
            .unwrap(),
            PartitionScheme::new(vec![iv("234", "234")]),
            None,
        )
        .unwrap();
        let glued = glue(&a, &b).unwrap();
        let ha = h_vector(&a.complex);
        let hb = h_vector(&b.complex);
        assert_eq!(h_vector(&glued.combined), ha.add(&hb));
        assert_eq!(interval_stats(&glued.scheme), h_vector(&glued.combined));
    }

    #[test]
    fn shelling_like_glue_replays_a_shelling_step() {
        let a = plain_partitioned(&["123"], &["123"]);
        let b_total = Complex::from_strs(&["234"]);
        let glued = glue_shelling_like(&a, &b_total, &Complex::void(), None, None).unwrap();
        assert_eq!(glued.combined.total(), &Complex::from_strs(&["123", "234"]));
        assert!(glued.combined.relative().is_void());
        assert!(glued.shelling.is_some());
        assert_eq!(
            verify_shelling(&glued.combined, glued.shelling.as_ref().unwrap()),
            Ok(())
        );
    }

    #[test]
    fn shelling_like_glue_precondition_violation() {
        // Δa ∩ Γb must land inside Γa: here Γb = ⟨23⟩ meets Δa = ⟨123⟩ but Γa is void.
        let a = plain_partitioned(&["123"], &["123"]);
        let b_total = Complex::from_strs(&["234"]);
        let b_gamma = Complex::from_strs(&["23"]);
        assert!(matches!(
            glue_shelling_like(&a, &b_total, &b_gamma, None, None),
            Err(AssemblyError::SubsetPrecondition(_))
        ));
    }

    #[test]
    fn transfer_scheme_through_cone_isomorphism() {
        // 4-cycle vs the relative cone over it with apex 5: τ ↦ τ ∪ {5}.
        let cycle = RelComplex::plain(Complex::from_strs(&["12", "23", "34", "14"]));
        let scheme = PartitionScheme::new(vec![
            iv(".", "12"),
            iv("3", "23"),
            iv("4", "34"),
            iv("14", "14"),
        ]);
        let cone_total = Complex::from_strs(&["125", "235", "345", "145"]);
        let cone = RelComplex::new(
            cone_total.clone(),
            Complex::from_strs(&["12", "23", "34", "14"]),
        )
        .unwrap();
        let five = Label::atom("5");
        let iso: BTreeMap<Face, Face> = cycle
            .faces()
            .iter()
            .map(|f| (f.clone(), f.with_vertex(&five)))
            .collect();
        let mapped = transfer_scheme(&iso, &cycle, &scheme, &cone).unwrap();
        assert_eq!(verify_partitioning(&cone, &mapped), Ok(()));
        assert_eq!(mapped.intervals[0], iv("5", "125"));

        // identity transfer
        let id: BTreeMap<Face, Face> = cycle
            .faces()
            .iter()
            .map(|f| (f.clone(), f.clone()))
            .collect();
        assert_eq!(
            transfer_scheme(&id, &cycle, &scheme, &cycle).unwrap(),
            scheme
        );
    }

    #[test]
    fn transfer_rejects_non_isomorphism() {
        let cycle = RelComplex::plain(Complex::from_strs(&["12", "23", "34", "14"]));
        let scheme = PartitionScheme::new(vec![
            iv(".", "12"),
            iv("3", "23"),
            iv("4", "34"),
            iv("14", "14"),
        ]);
        let path = RelComplex::plain(Complex::from_strs(&["12", "23", "34"]));
        let id: BTreeMap<Face, Face> = cycle
            .faces()
            .iter()
            .map(|f| (f.clone(), f.clone()))
            .collect();
        assert!(matches!(
            transfer_scheme(&id, &cycle, &scheme, &path),
            Err(AssemblyError::NotAPosetIsomorphism { .. })
        ));
    }

    fn path_rel_endpoint(n: usize) -> (RelComplex, BTreeMap<Label, Label>) {
        // path v1 − v2 − … − vn − x relative to ⟨x⟩, with the map x ↦ v1.
        let mut facets = Vec::new();
        for i in 1..n {
            facets.push(Face::new(vec![
                Label::atom(&format!("v{i}")),
                Label::atom(&format!("v{}", i + 1)),
            ]));
        }
        facets.push(Face::new(vec![
            Label::atom(&format!("v{n}")),
            Label::atom("x"),
        ]));
        let total = Complex::closure(facets);
        let rc = RelComplex::new(total.clone(), Complex::from_strs(&["x"])).unwrap();
        let mut vmap: BTreeMap<Label, Label> = total
            .vertices()
            .into_iter()
            .map(|v| (v.clone(), v))
            .collect();
        vmap.insert(Label::atom("x"), Label::atom("v1"));
        (rc, vmap)
    }

    #[test]
    fn folding_path_to_cycle() {
        let (rc, vmap) = path_rel_endpoint(3);
        let m = make_folding_map(&rc, &vmap).unwrap();
        // target is the 3-cycle relative to {∅}
        assert_eq!(
            m.target().total(),
            &Complex::closure(["v1,v2", "v2,v3", "v1,v3"].map(Face::parse).to_vec())
        );
        assert_eq!(m.target().relative(), &Complex::of_empty_face());

        // fold the path scheme [v1, v1v2], [v2, v2v3], [v3, v3x]
        let v = |name: &str| Face::singleton(Label::atom(name));
        let s = PartitionScheme::new(vec![
            Interval::new(v("v1"), Face::parse("v1,v2")),
            Interval::new(v("v2"), Face::parse("v2,v3")),
            Interval::new(v("v3"), Face::parse("v3,x")),
        ]);
        let folded = fold_scheme(&m, &s).unwrap();
        assert_eq!(verify_partitioning(m.target(), &folded), Ok(()));
    }

    #[test]
    fn folding_to_a_neighbor_degenerates() {
        let (rc, mut vmap) = path_rel_endpoint(3);
        vmap.insert(Label::atom("x"), Label::atom("v3"));
        assert!(matches!(
            make_folding_map(&rc, &vmap),
            Err(AssemblyError::Degenerate(_))
        ));
    }

    #[test]
    fn folding_identity_roundtrip() {
        let rc = RelComplex::plain(Complex::from_strs(&["123", "234"]));
        let vmap: BTreeMap<Label, Label> = rc
            .total()
            .vertices()
            .into_iter()
            .map(|v| (v.clone(), v))
            .collect();
        let m = make_folding_map(&rc, &vmap).unwrap();
        assert_eq!(m.target(), &rc);
        let s = scheme_from_shelling(
            &rc,
            &ShellingOrder::new(vec![Face::parse("123"), Face::parse("234")]),
        )
        .unwrap();
        assert_eq!(fold_scheme(&m, &s).unwrap(), s);
    }

    #[test]
    fn f1_violation_detected() {
        // two disjoint edges folded onto each other: relative faces collide
        let rc = RelComplex::plain(Complex::from_strs(&["12", "34"]));
        let vmap: BTreeMap<Label, Label> = [
            (Label::atom("1"), Label::atom("1")),
            (Label::atom("2"), Label::atom("2")),
            (Label::atom("3"), Label::atom("1")),
            (Label::atom("4"), Label::atom("2")),
        ]
        .into_iter()
        .collect();
        assert!(matches!(
            make_folding_map(&rc, &vmap),
            Err(AssemblyError::F1Violation { .. })
        ));
    }

    #[test]
    fn cut_mobius_strip_along_interior_edge() {
        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        let res = cut(&m, &Complex::from_strs(&["12"])).unwrap();
        assert_eq!(res.complex.facet_count(), 5);
        assert_eq!(res.complex.vertices().len(), 7);
        // folding back recovers the strip exactly
        let folded = res.complex.map_vertices(&|v| res.fold_back[v].clone());
        assert_eq!(folded, m);
        // the cut surface is simply connected along a 7-cycle boundary
        let bd = res.complex.boundary().unwrap();
        assert_eq!(bd.facet_count(), 7);
        assert!(bd.is_connected());
        assert_eq!(res.complex.euler_char_reduced(), 0);
    }

    #[test]
    fn cut_along_boundary_edge_changes_nothing() {
        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        // 13 is a boundary edge (one incident triangle)
        let res = cut(&m, &Complex::from_strs(&["13"])).unwrap();
        assert_eq!(res.complex, m);
    }

    #[test]
    fn cut_validates_inputs() {
        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        assert!(matches!(
            cut(&m, &Complex::from_strs(&["19"])),
            Err(AssemblyError::LocusNotSubcomplex(_))
        ));
        assert!(matches!(
            cut(&m, &Complex::from_strs(&["1"])),
            Err(AssemblyError::LocusDimension)
        ));
        assert!(matches!(
            cut(&Complex::from_strs(&["12"]), &Complex::from_strs(&["12"])),
            Err(AssemblyError::CutComplexNotSurface)
        ));
    }
}
