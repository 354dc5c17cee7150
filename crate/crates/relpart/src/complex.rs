//! Simplicial complexes stored by their facets. The full face list is
//! enumerated lazily and cached, so membership-heavy algorithms (verification,
//! search) pay the closure cost once per complex.
//!
//! Two degenerate complexes are kept distinct throughout: the void complex
//! (no faces at all, `closure([])`) and the complex `{∅}` whose only face is
//! the empty face (`closure([∅])`).

use crate::face::Face;
use crate::label::Label;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face {{{0}}} is not in the complex")]
    FaceNotInComplex(Face),
    #[error("apex {0} already occurs in the complex")]
    ApexCollision(Label),
    #[error("complex is not pure: facets {{{0}}} and {{{1}}} have different dimensions")]
    NotPure(Face, Face),
    #[error("edge {{{0}}} lies in {1} triangles; boundary needs at most 2")]
    NonPseudomanifold(Face, usize),
    #[error("boundary is only defined for pure 2-dimensional complexes")]
    BoundaryDimension,
}

pub struct Complex {
    facets: BTreeSet<Face>,
    faces: OnceLock<BTreeSet<Face>>,
}

impl Clone for Complex {
    fn clone(&self) -> Complex {
        Complex {
            facets: self.facets.clone(),
            faces: OnceLock::new(),
        }
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Complex) -> bool {
        self.facets == other.facets
    }
}
impl Eq for Complex {}

impl PartialOrd for Complex {
    fn partial_cmp(&self, other: &Complex) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Complex {
    fn cmp(&self, other: &Complex) -> std::cmp::Ordering {
        self.facets.cmp(&other.facets)
    }
}

impl std::hash::Hash for Complex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl Complex {
    /// The void complex: no faces whatsoever.
    pub fn void() -> Complex {
        Complex::closure(Vec::new())
    }

    /// The complex `{∅}`: exactly one face, the empty one.
    pub fn of_empty_face() -> Complex {
        Complex::closure(vec![Face::empty()])
    }

    /// Smallest complex containing every generator; facets are the maximal
    /// generators.
    pub fn closure(generators: Vec<Face>) -> Complex {
        let mut facets: BTreeSet<Face> = BTreeSet::new();
        for g in generators {
            if facets.iter().any(|f| g.is_subset_of(f)) {
                continue;
            }
            facets.retain(|f| !f.is_subset_of(&g));
            facets.insert(g);
        }
        Complex {
            facets,
            faces: OnceLock::new(),
        }
    }

    /// Fixture helper: one facet per string, parsed by `Face::parse`.
    pub fn from_strs(strs: &[&str]) -> Complex {
        Complex::closure(strs.iter().map(|s| Face::parse(s)).collect())
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// True when the complex has no faces at all.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces, the empty one included (when the complex is non-void).
    pub fn faces(&self) -> &BTreeSet<Face> {
        self.faces.get_or_init(|| {
            let mut all = BTreeSet::new();
            for f in &self.facets {
                for s in f.subsets() {
                    all.insert(s);
                }
            }
            all
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        self.faces()
            .iter()
            .filter(|f| f.dim() == d)
            .cloned()
            .collect()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(g))
    }

    /// Dimension of the largest face; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        let mut dims = self.facets.iter().map(|f| f.dim());
        match dims.next() {
            None => true,
            Some(d) => dims.all(|e| e == d),
        }
    }

    pub fn vertices(&self) -> BTreeSet<Label> {
        self.facets
            .iter()
            .flat_map(|f| f.vertices().iter().cloned())
            .collect()
    }

    /// lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }. Facets are φ∖σ over facets φ ⊇ σ.
    pub fn link(&self, f: &Face) -> Result<Complex, ComplexError> {
        if !self.contains(f) {
            return Err(ComplexError::FaceNotInComplex(f.clone()));
        }
        Ok(Complex::closure(
            self.facets
                .iter()
                .filter(|phi| f.is_subset_of(phi))
                .map(|phi| phi.minus(f))
                .collect(),
        ))
    }

    /// del(σ) = { τ : σ ⊄ τ }.
    pub fn deletion(&self, f: &Face) -> Result<Complex, ComplexError> {
        if !self.contains(f) {
            return Err(ComplexError::FaceNotInComplex(f.clone()));
        }
        let mut generators = Vec::new();
        for phi in &self.facets {
            if f.is_subset_of(phi) {
                // Maximal subsets of φ avoiding σ: drop one vertex of σ.
                for v in f.vertices() {
                    generators.push(phi.without_vertex(v));
                }
            } else {
                generators.push(phi.clone());
            }
        }
        Ok(Complex::closure(generators))
    }

    /// Cone with a fresh apex: facets σ ∪ {apex}. The cone over the void
    /// complex is the single point ⟨{apex}⟩.
    pub fn cone(&self, apex: &Label) -> Result<Complex, ComplexError> {
        if self.vertices().contains(apex) {
            return Err(ComplexError::ApexCollision(apex.clone()));
        }
        if self.is_void() {
            return Ok(Complex::closure(vec![Face::singleton(apex.clone())]));
        }
        Ok(Complex::closure(
            self.facets.iter().map(|f| f.with_vertex(apex)).collect(),
        ))
    }

    /// Boundary of a pure 2-complex: closure of the edges lying in exactly
    /// one triangle. Errors if an edge lies in three or more.
    pub fn boundary(&self) -> Result<Complex, ComplexError> {
        if self.dim() != Some(2) {
            return Err(ComplexError::BoundaryDimension);
        }
        if !self.is_pure() {
            let mut by_dim = self.facets.iter();
            let first = by_dim.next().unwrap().clone();
            let other = self
                .facets
                .iter()
                .find(|f| f.dim() != first.dim())
                .unwrap()
                .clone();
            return Err(ComplexError::NotPure(first, other));
        }
        let mut bd = Vec::new();
        for e in self.faces_of_dim(1) {
            let n = self.triangles_containing(&e).len();
            if n > 2 {
                return Err(ComplexError::NonPseudomanifold(e, n));
            }
            if n == 1 {
                bd.push(e);
            }
        }
        Ok(Complex::closure(bd))
    }

    /// Triangles (2-faces) containing the given face; handy for surface work.
    pub fn triangles_containing(&self, f: &Face) -> Vec<Face> {
        self.faces_of_dim(2)
            .into_iter()
            .filter(|t| f.is_subset_of(t))
            .collect()
    }

    /// Reduced Euler characteristic χ̃ = Σ (−1)^dim over all faces (∅ counts
    /// as −1). The void complex has χ̃ = 0.
    pub fn euler_char_reduced(&self) -> i64 {
        self.faces()
            .iter()
            .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    pub fn union(&self, other: &Complex) -> Complex {
        Complex::closure(
            self.facets
                .iter()
                .chain(other.facets.iter())
                .cloned()
                .collect(),
        )
    }

    /// Faces common to both complexes, generated by pairwise facet meets.
    pub fn intersection(&self, other: &Complex) -> Complex {
        let mut generators = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                generators.push(f.intersection(g));
            }
        }
        if self.is_void() || other.is_void() {
            return Complex::void();
        }
        Complex::closure(generators)
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// Apply a vertex relabeling (not necessarily injective); facets are
    /// re-reduced, so the result is a genuine complex.
    pub fn map_vertices(&self, f: &impl Fn(&Label) -> Label) -> Complex {
        Complex::closure(self.facets.iter().map(|face| face.map(f)).collect())
    }

    /// Connectivity of the vertex set through edges. Void and single-vertex
    /// complexes count as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_components().len() <= 1
    }

    /// Partition of the facets into classes with connected vertex sets.
    pub fn vertex_components(&self) -> Vec<Complex> {
        let mut remaining: Vec<Face> = self.facets.iter().cloned().collect();
        let mut components = Vec::new();
        while let Some(seed) = remaining.pop() {
            let mut verts: BTreeSet<Label> = seed.vertices().iter().cloned().collect();
            let mut members = vec![seed];
            loop {
                let mut moved = false;
                remaining.retain(|f| {
                    if f.vertices().iter().any(|v| verts.contains(v)) {
                        verts.extend(f.vertices().iter().cloned());
                        members.push(f.clone());
                        moved = true;
                        false
                    } else {
                        true
                    }
                });
                if !moved {
                    break;
                }
            }
            components.push(Complex::closure(members));
        }
        components
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Complex {
        Complex::from_strs(&["125", "345"])
    }

    #[test]
    fn closure_reduces_to_maximal_generators() {
        let c = Complex::closure(vec![Face::parse("1"), Face::parse("12")]);
        assert_eq!(c.facets().len(), 1);
        assert!(c.contains(&Face::parse("12")));
        assert!(Complex::void().is_void());
        assert!(!Complex::of_empty_face().is_void());
        assert_eq!(Complex::of_empty_face().face_count(), 1);
    }

    #[test]
    fn bowtie_counts() {
        let c = bowtie();
        assert_eq!(c.facet_count(), 2);
        assert_eq!(c.faces_of_dim(1).len(), 6);
        assert_eq!(c.faces_of_dim(0).len(), 5);
        assert_eq!(c.face_count(), 1 + 5 + 6 + 2);
        assert!(c.contains(&Face::empty()));
    }

    #[test]
    fn link_and_deletion_of_hub() {
        let c = bowtie();
        let lk = c.link(&Face::parse("5")).unwrap();
        assert_eq!(lk, Complex::from_strs(&["12", "34"]));
        let del = c.deletion(&Face::parse("5")).unwrap();
        assert_eq!(del, Complex::from_strs(&["12", "34"]));
        assert_eq!(
            c.link(&Face::parse("9")),
            Err(ComplexError::FaceNotInComplex(Face::parse("9")))
        );
    }

    #[test]
    fn deletion_keeps_smaller_faces() {
        // del of an edge keeps its endpoints.
        let c = Complex::from_strs(&["123"]);
        let del = c.deletion(&Face::parse("12")).unwrap();
        assert_eq!(del, Complex::from_strs(&["13", "23"]));
    }

    #[test]
    fn cone_conventions() {
        let u = Label::atom("u");
        assert_eq!(
            Complex::void().cone(&u).unwrap(),
            Complex::from_strs(&["u"])
        );
        let c = Complex::from_strs(&["12"]);
        let coned = c.cone(&u).unwrap();
        assert_eq!(coned.dim(), Some(2));
        assert!(coned.contains(&Face::new(vec![
            Label::atom("1"),
            Label::atom("2"),
            u.clone()
        ])));
        assert_eq!(
            Complex::from_strs(&["u"]).cone(&u),
            Err(ComplexError::ApexCollision(u))
        );
    }

    #[test]
    fn boundary_of_triangle_and_mobius() {
        let t = Complex::from_strs(&["uvw"]);
        let bd = t.boundary().unwrap();
        assert_eq!(bd.facet_count(), 3);
        assert_eq!(bd.dim(), Some(1));

        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        let bd = m.boundary().unwrap();
        // 5-cycle 1-3-5-2-4-1
        assert_eq!(bd, Complex::from_strs(&["13", "35", "25", "24", "14"]));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(Complex::void().euler_char_reduced(), 0);
        assert_eq!(Complex::of_empty_face().euler_char_reduced(), -1);
        assert_eq!(Complex::from_strs(&["1"]).euler_char_reduced(), 0);
        let circle = Complex::from_strs(&["12", "23", "13"]);
        assert_eq!(circle.euler_char_reduced(), -1);
        let sphere = Complex::from_strs(&["123", "124", "134", "234"]);
        assert_eq!(sphere.euler_char_reduced(), 1);
    }

    #[test]
    fn union_intersection() {
        let a = Complex::from_strs(&["125"]);
        let b = Complex::from_strs(&["345"]);
        assert_eq!(a.union(&b), bowtie());
        assert_eq!(a.intersection(&b), Complex::from_strs(&["5"]));
        assert_eq!(a.intersection(&Complex::void()), Complex::void());
        assert_eq!(a.union(&Complex::void()), a);
        // non-void meets non-void at least in ∅
        assert_eq!(
            Complex::from_strs(&["1"]).intersection(&Complex::from_strs(&["2"])),
            Complex::of_empty_face()
        );
    }

    #[test]
    fn connectivity() {
        assert!(bowtie().is_connected());
        let two = Complex::from_strs(&["12", "34"]);
        assert_eq!(two.vertex_components().len(), 2);
        assert!(!two.is_connected());
        assert!(Complex::void().is_connected());
    }
}
