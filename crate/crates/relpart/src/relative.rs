//! Relative simplicial complexes: pairs (Δ, Γ) with Γ a subcomplex of Δ,
//! whose face set is the difference Δ∖Γ. The difference is automatically
//! order-convex, which is what makes interval covers behave.

use crate::complex::Complex;
use crate::face::Face;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelativeError {
    #[error(
        "relative part is not a subcomplex: generator {{{0}}} is not a face of the total complex"
    )]
    NotSubcomplex(Face),
}

pub struct RelComplex {
    total: Complex,
    relative: Complex,
    faces: OnceLock<BTreeSet<Face>>,
}

impl Clone for RelComplex {
    fn clone(&self) -> RelComplex {
        RelComplex {
            total: self.total.clone(),
            relative: self.relative.clone(),
            faces: OnceLock::new(),
        }
    }
}

impl PartialEq for RelComplex {
    fn eq(&self, other: &RelComplex) -> bool {
        self.total == other.total && self.relative == other.relative
    }
}
impl Eq for RelComplex {}

impl RelComplex {
    pub fn new(total: Complex, relative: Complex) -> Result<RelComplex, RelativeError> {
        if let Some(bad) = relative.facets().iter().find(|f| !total.contains(f)) {
            return Err(RelativeError::NotSubcomplex(bad.clone()));
        }
        Ok(RelComplex {
            total,
            relative,
            faces: OnceLock::new(),
        })
    }

    /// A plain complex viewed relatively: Γ is void, every face counts.
    pub fn plain(total: Complex) -> RelComplex {
        RelComplex {
            total,
            relative: Complex::void(),
            faces: OnceLock::new(),
        }
    }

    /// (Δ, {∅}): all faces except the empty one.
    pub fn rel_empty_face(total: Complex) -> RelComplex {
        RelComplex::new(total, Complex::of_empty_face())
            .expect("the empty face is a face of any non-void complex")
    }

    pub fn total(&self) -> &Complex {
        &self.total
    }

    pub fn relative(&self) -> &Complex {
        &self.relative
    }

    /// The face set Δ∖Γ.
    pub fn faces(&self) -> &BTreeSet<Face> {
        self.faces.get_or_init(|| {
            self.total
                .faces()
                .iter()
                .filter(|f| !self.relative.contains(f))
                .cloned()
                .collect()
        })
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.total.contains(f) && !self.relative.contains(f)
    }

    /// Facets: the maximal elements of Δ∖Γ. By order-convexity these are
    /// exactly the faces with no +1-coface inside Δ∖Γ; since Γ is downward
    /// closed they are also exactly the facets of Δ not lying in Γ.
    pub fn facets(&self) -> Vec<Face> {
        self.total
            .facets()
            .iter()
            .filter(|f| !self.relative.contains(f))
            .cloned()
            .collect()
    }

    /// Largest face dimension of Δ∖Γ; `None` when there are no faces.
    pub fn dim(&self) -> Option<i64> {
        self.faces().iter().map(|f| f.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        let mut dims = facets.iter().map(|f| f.dim());
        match dims.next() {
            None => true,
            Some(d) => dims.all(|e| e == d),
        }
    }

    /// Whether this pair has no relative part at all (Γ void).
    pub fn is_plain(&self) -> bool {
        self.relative.is_void()
    }

    /// The minimal representation: (⟨Λ⟩, ⟨Λ⟩∖Λ) for Λ = Δ∖Γ. It has the same
    /// face set with the smallest possible total complex.
    pub fn minimal_representation(&self) -> RelComplex {
        let lambda = self.faces();
        let total = Complex::closure(lambda.iter().cloned().collect());
        let gamma_faces: Vec<Face> = total
            .faces()
            .iter()
            .filter(|f| !lambda.contains(*f))
            .cloned()
            .collect();
        let relative = Complex::closure(gamma_faces);
        RelComplex::new(total, relative).expect("difference of a closure is order-convex")
    }
}

impl fmt::Display for RelComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_plain() {
            write!(f, "{}", self.total)
        } else {
            write!(f, "({}, {})", self.total, self.relative)
        }
    }
}

impl fmt::Debug for RelComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
