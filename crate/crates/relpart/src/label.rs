//! Vertex labels. Labels are opaque tokens with a total order; besides plain
//! atoms we support two derived forms that show up when complexes are
//! manufactured from other complexes: indexed copies (vertex replicas made by
//! `cut`) and set labels (barycentric subdivision vertices, one per face).

use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// A plain token, e.g. `7` or `B` or `v12`.
    Atom(Arc<str>),
    /// The `i`-th replica of a label, created when a complex is cut open.
    Indexed(Arc<Label>, u32),
    /// A label standing for a set of labels (a face), used for subdivisions.
    Set(Arc<[Label]>),
}

impl Label {
    pub fn atom(s: &str) -> Label {
        Label::Atom(Arc::from(s))
    }

    pub fn indexed(base: &Label, i: u32) -> Label {
        Label::Indexed(Arc::new(base.clone()), i)
    }

    pub fn set(mut members: Vec<Label>) -> Label {
        members.sort();
        members.dedup();
        Label::Set(Arc::from(members))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => write!(f, "{s}"),
            Label::Indexed(base, i) => write!(f, "{base}.{i}"),
            Label::Set(ls) => {
                write!(f, "(")?;
                for (k, l) in ls.iter().enumerate() {
                    if k > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Label {
        Label::atom(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_total_and_stable() {
        let a = Label::atom("a");
        let b = Label::atom("b");
        let a0 = Label::indexed(&a, 0);
        let a1 = Label::indexed(&a, 1);
        assert!(a < b);
        assert!(a0 < a1);
        // All atoms sort before all indexed copies, which sort before sets.
        assert!(b < a0);
        assert!(a1 < Label::set(vec![a.clone(), b.clone()]));
    }

    #[test]
    fn display_distinguishes_forms() {
        let a = Label::atom("a");
        assert_eq!(Label::indexed(&a, 2).to_string(), "a.2");
        let s = Label::set(vec![Label::atom("2"), Label::atom("1")]);
        assert_eq!(s.to_string(), "(1|2)");
    }
}
