//! Faces: finite vertex sets, kept sorted and deduplicated. The empty face is
//! a legitimate face (dimension -1) and is distinct from the absence of faces.

use crate::label::Label;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<Label>);

impl Face {
    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn new(mut vertices: Vec<Label>) -> Face {
        vertices.sort();
        vertices.dedup();
        Face(vertices)
    }

    pub fn singleton(v: Label) -> Face {
        Face(vec![v])
    }

    /// Parse a face from whitespace-free text: each character is an atom,
    /// unless the text contains `,`, in which case comma-separated tokens are
    /// atoms. Convenient for fixtures like `"37BE"` or `"u0,u1,l0"`.
    pub fn parse(text: &str) -> Face {
        if text == "." {
            return Face::empty();
        }
        let vertices: Vec<Label> = if text.contains(',') {
            text.split(',').map(Label::atom).collect()
        } else {
            text.chars().map(|c| Label::atom(&c.to_string())).collect()
        };
        Face::new(vertices)
    }

    pub fn vertices(&self) -> &[Label] {
        &self.0
    }

    /// Dimension: one less than the vertex count; the empty face has dim -1.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &Label) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        self.0.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut vs = self.0.clone();
        vs.extend(other.0.iter().cloned());
        Face::new(vs)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .filter(|v| other.contains(v))
                .cloned()
                .collect(),
        )
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .filter(|v| !other.contains(v))
                .cloned()
                .collect(),
        )
    }

    pub fn with_vertex(&self, v: &Label) -> Face {
        let mut vs = self.0.clone();
        vs.push(v.clone());
        Face::new(vs)
    }

    pub fn without_vertex(&self, v: &Label) -> Face {
        Face(self.0.iter().filter(|w| *w != v).cloned().collect())
    }

    /// All subsets of this face, the empty face included.
    pub fn subsets(&self) -> Vec<Face> {
        let n = self.0.len();
        assert!(n < 63, "face too large to enumerate subsets");
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            let vs: Vec<Label> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.0[i].clone())
                .collect();
            out.push(Face(vs));
        }
        out
    }

    /// Subsets of cardinality one less (the boundary ridges); empty face has none.
    pub fn ridges(&self) -> Vec<Face> {
        (0..self.0.len())
            .map(|i| {
                let mut vs = self.0.clone();
                vs.remove(i);
                Face(vs)
            })
            .collect()
    }

    /// Rename all vertices through `f` (which need not be injective).
    pub fn map(&self, f: &impl Fn(&Label) -> Label) -> Face {
        Face::new(self.0.iter().map(f).collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromIterator<Label> for Face {
    fn from_iter<T: IntoIterator<Item = Label>>(iter: T) -> Face {
        Face::new(iter.into_iter().collect())
    }
}
