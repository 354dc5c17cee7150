//! Built-in complexes: the Rudin ball decomposition, small fixtures, minimal
//! triangulations obtained by quotients, and generators for more.

pub mod classify;
pub mod dunce;
pub mod generators;

pub use classify::{classify_surface, NotASurface, SpaceClass, SurfaceKind};
pub use dunce::{dunce_grid, validate_dunce_hat, CornerData, DunceViolation, SimplicialityFailure};
pub use generators::{barycentric_subdivision, random_disk, random_graph};

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;
use crate::relative::RelComplex;
use crate::scheme::{Interval, PartitionScheme, ShellingOrder};

/// A named entry: either a plain complex or a relative one.
#[derive(Debug, Clone)]
pub enum CorpusEntry {
    Plain(Complex),
    Relative(RelComplex),
}

impl CorpusEntry {
    /// The underlying total complex.
    pub fn total(&self) -> &Complex {
        match self {
            CorpusEntry::Plain(c) => c,
            CorpusEntry::Relative(rc) => rc.total(),
        }
    }

    /// View as a relative complex (plain entries get a void relative part).
    pub fn into_relative(self) -> RelComplex {
        match self {
            CorpusEntry::Plain(c) => RelComplex::plain(c),
            CorpusEntry::Relative(rc) => rc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown corpus name {0:?}")]
pub struct UnknownName(pub String);

pub const CORPUS_NAMES: &[&str] = &[
    "rudin",
    "rudin_a",
    "rudin_b",
    "rudin_ab_intersection",
    "rudin_b_relative",
    "bowtie",
    "fig1_graph",
    "mobius5",
    "rp2_min",
    "dunce_grid_3",
];

/// Look up a built-in complex by name. See [`CORPUS_NAMES`].
pub fn corpus(name: &str) -> Result<CorpusEntry, UnknownName> {
    let entry = match name {
        "rudin" => CorpusEntry::Plain(rudin()),
        "rudin_a" => CorpusEntry::Plain(rudin_a()),
        "rudin_b" => CorpusEntry::Plain(rudin_b()),
        "rudin_ab_intersection" => CorpusEntry::Plain(rudin_ab_intersection()),
        "rudin_b_relative" => CorpusEntry::Relative(rudin_b_relative()),
        "bowtie" => CorpusEntry::Plain(bowtie()),
        "fig1_graph" => CorpusEntry::Plain(fig1_graph()),
        "mobius5" => CorpusEntry::Plain(mobius5()),
        "rp2_min" => CorpusEntry::Plain(rp2_min()),
        "dunce_grid_3" => {
            CorpusEntry::Plain(dunce_grid(3).expect("the 3x3 grid identification is simplicial"))
        }
        other => return Err(UnknownName(other.to_string())),
    };
    Ok(entry)
}

// Rudin's non-shellable 3-ball, split into a shellable part Δa and the
// 14-facet remainder Δb.  Δa is listed in a shelling order.
const RUDIN_A: [&str; 27] = [
    "BCDE", "ABCE", "9BDE", "8CDE", "7BCD", "58CD", "3ABE", "36AE", "36AB", //
    "6ABC", "26AC", "2ACE", "24AE", "28CE", "248E", "268C", "48DE", "4ADE", //
    "458D", "458C", "68BC", "6ADE", "69DE", "48BC", "47BC", "17BD", "19BD",
];

const RUDIN_B: [&str; 14] = [
    "137D", "139D", "39CD", "59CD", "37CD", "347C", "569D", "347B", "37BE", //
    "157B", "159B", "59BE", "569E", "57BE",
];

// Facets of Δa ∩ Δb, again in a shelling order.
const RUDIN_AB: [&str; 12] = [
    "17B", "17D", "19B", "9BE", "7CD", "47B", "47C", "19D", "69D", "5CD", "69E", "3BE",
];

// The edge-to-facet matching that partitions (Δb, Δa ∩ Δb).
const RUDIN_B_INTERVALS: [(&str, &str); 14] = [
    ("13", "137D"),
    ("15", "159B"),
    ("34", "347B"),
    ("37", "37BE"),
    ("39", "139D"),
    ("3C", "347C"),
    ("3D", "37CD"),
    ("56", "569D"),
    ("57", "157B"),
    ("59", "59CD"),
    ("5B", "59BE"),
    ("5E", "569E"),
    ("7E", "57BE"),
    ("9C", "39CD"),
];

pub fn rudin_a() -> Complex {
    Complex::from_strs(&RUDIN_A)
}

pub fn rudin_b() -> Complex {
    Complex::from_strs(&RUDIN_B)
}

pub fn rudin() -> Complex {
    rudin_a().union(&rudin_b())
}

pub fn rudin_ab_intersection() -> Complex {
    Complex::from_strs(&RUDIN_AB)
}

/// The relative complex (Δb, Δa ∩ Δb).
pub fn rudin_b_relative() -> RelComplex {
    RelComplex::new(rudin_b(), rudin_ab_intersection())
        .expect("the listed intersection facets lie in Δb")
}

/// The listed facet order of Δa, which is a shelling.
pub fn rudin_a_order() -> ShellingOrder {
    ShellingOrder::new(RUDIN_A.iter().map(|s| Face::parse(s)).collect())
}

/// The listed facet order of Δa ∩ Δb, which is a shelling.
pub fn rudin_ab_order() -> ShellingOrder {
    ShellingOrder::new(RUDIN_AB.iter().map(|s| Face::parse(s)).collect())
}

/// The 14-interval partitioning scheme of (Δb, Δa ∩ Δb).
pub fn rudin_b_scheme() -> PartitionScheme {
    PartitionScheme::new(
        RUDIN_B_INTERVALS
            .iter()
            .map(|(min, max)| Interval::new(Face::parse(min), Face::parse(max)))
            .collect(),
    )
}

/// Two triangles joined at a vertex; h = (1, 2, -1, 0).
pub fn bowtie() -> Complex {
    Complex::from_strs(&["125", "345"])
}

/// A four-edge graph with an isolated-free partitioning scheme.
pub fn fig1_graph() -> Complex {
    Complex::from_strs(&["12", "34", "45", "35"])
}

/// Partitioning scheme for [`fig1_graph`]: [∅,12] ⊔ [3,34] ⊔ [4,45] ⊔ [5,35].
pub fn fig1_scheme() -> PartitionScheme {
    PartitionScheme::new(vec![
        Interval::new(Face::empty(), Face::parse("12")),
        Interval::new(Face::parse("3"), Face::parse("34")),
        Interval::new(Face::parse("4"), Face::parse("45")),
        Interval::new(Face::parse("5"), Face::parse("35")),
    ])
}

/// The five-triangle Möbius strip.
pub fn mobius5() -> Complex {
    Complex::from_strs(&["123", "234", "345", "145", "125"])
}

/// A six-triangle annulus (boundary of a triangular prism minus the two
/// triangular ends).
pub fn prism_annulus() -> Complex {
    Complex::from_strs(&["124", "245", "235", "356", "136", "146"])
}

/// The six-vertex projective plane: antipodal vertex quotient of the
/// icosahedron.
pub fn rp2_min() -> Complex {
    let n = Label::atom("n");
    let s = Label::atom("s");
    let u: Vec<Label> = (0..5).map(|i| Label::atom(&format!("u{i}"))).collect();
    let l: Vec<Label> = (0..5).map(|i| Label::atom(&format!("l{i}"))).collect();

    let mut facets = Vec::new();
    for i in 0..5usize {
        let j = (i + 1) % 5;
        facets.push(Face::new(vec![n.clone(), u[i].clone(), u[j].clone()]));
        facets.push(Face::new(vec![s.clone(), l[i].clone(), l[j].clone()]));
        facets.push(Face::new(vec![u[i].clone(), u[j].clone(), l[i].clone()]));
        facets.push(Face::new(vec![l[i].clone(), l[j].clone(), u[j].clone()]));
    }
    let ico = Complex::closure(facets);
    assert_eq!(ico.facet_count(), 20);

    // Identify antipodal vertices: n ~ s, u_i ~ l_{i+2}.
    let c = Label::atom("c");
    let v: Vec<Label> = (0..5).map(|i| Label::atom(&format!("v{i}"))).collect();
    let quotient = ico.map_vertices(&|lab: &Label| {
        if *lab == n || *lab == s {
            return c.clone();
        }
        for i in 0..5usize {
            if *lab == u[i] {
                return v[i].clone();
            }
            if *lab == l[i] {
                return v[(i + 3) % 5].clone();
            }
        }
        unreachable!("icosahedron vertex");
    });

    assert_eq!(quotient.vertices().len(), 6);
    assert_eq!(quotient.faces_of_dim(1).len(), 15);
    assert_eq!(quotient.facet_count(), 10);
    let class = classify_surface(&quotient).expect("quotient is a closed surface");
    assert_eq!(class.kind, SurfaceKind::ProjectivePlane);
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relative::RelComplex;
    use crate::scheme::{verify_partitioning, verify_shelling};
    use crate::vectors::{f_vector, h_vector};

    #[test]
    fn rudin_counts_and_vectors() {
        let r = rudin();
        assert_eq!(r.facet_count(), 41);
        assert_eq!(rudin_a().facet_count(), 27);
        assert_eq!(rudin_b().facet_count(), 14);
        let rc = RelComplex::plain(r);
        assert_eq!(f_vector(&rc).0, vec![1, 14, 66, 94, 41]);
        assert_eq!(h_vector(&rc).0, vec![1, 10, 30, 0, 0]);
    }

    #[test]
    fn rudin_tables_cross_validate() {
        // The three facet tables are mutually consistent: the listed
        // intersection generators really generate Δa ∩ Δb.
        let meet = rudin_a().intersection(&rudin_b());
        assert_eq!(meet, rudin_ab_intersection());
        assert_eq!(rudin_ab_intersection().facet_count(), 12);
    }

    #[test]
    fn rudin_a_listed_order_is_a_shelling() {
        let rc = RelComplex::plain(rudin_a());
        verify_shelling(&rc, &rudin_a_order()).unwrap();
    }

    #[test]
    fn rudin_intersection_listed_order_is_a_shelling() {
        let rc = RelComplex::plain(rudin_ab_intersection());
        verify_shelling(&rc, &rudin_ab_order()).unwrap();
    }

    #[test]
    fn rudin_b_relative_scheme_verifies() {
        let rc = rudin_b_relative();
        assert_eq!(h_vector(&rc).0, vec![0, 0, 14, 0, 0]);
        verify_partitioning(&rc, &rudin_b_scheme()).unwrap();
    }

    #[test]
    fn fig1_scheme_verifies() {
        let rc = RelComplex::plain(fig1_graph());
        verify_partitioning(&rc, &fig1_scheme()).unwrap();
    }

    #[test]
    fn corpus_lookup() {
        for name in CORPUS_NAMES {
            assert!(corpus(name).is_ok(), "missing corpus entry {name}");
        }
        assert!(matches!(corpus("nope"), Err(UnknownName(n)) if n == "nope"));
    }

    #[test]
    fn minimal_triangulations_classify() {
        let m = classify_surface(&mobius5()).unwrap();
        assert_eq!(m.kind, SurfaceKind::Mobius);
        assert_eq!((m.chi, m.orientable, m.boundary_components), (0, false, 1));

        let a = classify_surface(&prism_annulus()).unwrap();
        assert_eq!(a.kind, SurfaceKind::Annulus);
        assert_eq!((a.chi, a.orientable, a.boundary_components), (0, true, 2));

        let p = classify_surface(&rp2_min()).unwrap();
        assert_eq!(p.kind, SurfaceKind::ProjectivePlane);
        assert_eq!((p.chi, p.orientable, p.boundary_components), (1, false, 0));
    }
}
