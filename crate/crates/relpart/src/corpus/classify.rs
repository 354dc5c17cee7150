//! Recognize which compact surface a pure 2-complex triangulates, by
//! computing invariants: Euler characteristic, orientability, and the number
//! of boundary circles.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Disk,
    Sphere,
    Mobius,
    Annulus,
    Torus,
    KleinBottle,
    ProjectivePlane,
    Other,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SurfaceKind::Disk => "disk",
            SurfaceKind::Sphere => "sphere",
            SurfaceKind::Mobius => "mobius",
            SurfaceKind::Annulus => "annulus",
            SurfaceKind::Torus => "torus",
            SurfaceKind::KleinBottle => "klein-bottle",
            SurfaceKind::ProjectivePlane => "projective-plane",
            SurfaceKind::Other => "other-surface",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceClass {
    pub kind: SurfaceKind,
    pub chi: i64,
    pub orientable: bool,
    pub boundary_components: usize,
}

impl fmt::Display for SpaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (chi={}, {}, {} boundary component{})",
            self.kind,
            self.chi,
            if self.orientable {
                "orientable"
            } else {
                "non-orientable"
            },
            self.boundary_components,
            if self.boundary_components == 1 {
                ""
            } else {
                "s"
            },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotASurface {
    #[error("complex is not pure 2-dimensional")]
    NotPureTwoDim,
    #[error("edge {{{0}}} lies in {1} triangles")]
    OverusedEdge(Face, usize),
    #[error("vertex {0} has a link that is not a single path or cycle")]
    BadVertexLink(Label),
    #[error("complex is not connected")]
    Disconnected,
}

/// Decide which surface `c` triangulates.
///
/// Checks the combinatorial-surface conditions (every edge in at most two
/// triangles, every vertex link a single path or cycle, connected), then maps
/// (χ, orientability, boundary circles) through the classification table.
pub fn classify_surface(c: &Complex) -> Result<SpaceClass, NotASurface> {
    if c.dim() != Some(2) || !c.is_pure() {
        return Err(NotASurface::NotPureTwoDim);
    }

    let mut boundary_edges = Vec::new();
    for edge in c.faces_of_dim(1) {
        let incident = c.triangles_containing(&edge).len();
        match incident {
            1 => boundary_edges.push(edge),
            2 => {}
            n => return Err(NotASurface::OverusedEdge(edge, n)),
        }
    }

    for v in c.vertices() {
        let link = c.link(&Face::singleton(v.clone())).expect("vertex of c");
        if !is_path_or_cycle(&link) {
            return Err(NotASurface::BadVertexLink(v));
        }
    }

    if !c.is_connected() {
        return Err(NotASurface::Disconnected);
    }

    let chi = c.euler_char_reduced() + 1;
    let boundary_components = if boundary_edges.is_empty() {
        0
    } else {
        Complex::closure(boundary_edges).vertex_components().len()
    };
    let orientable = is_orientable(c);

    let kind = match (boundary_components, chi, orientable) {
        (0, 2, true) => SurfaceKind::Sphere,
        (0, 0, true) => SurfaceKind::Torus,
        (0, 0, false) => SurfaceKind::KleinBottle,
        (0, 1, false) => SurfaceKind::ProjectivePlane,
        (1, 1, true) => SurfaceKind::Disk,
        (1, 0, false) => SurfaceKind::Mobius,
        (2, 0, true) => SurfaceKind::Annulus,
        _ => SurfaceKind::Other,
    };

    Ok(SpaceClass {
        kind,
        chi,
        orientable,
        boundary_components,
    })
}

/// True iff the 1-complex is a single path (with at least one edge) or a
/// single cycle.  This is the link condition for surface vertices.
fn is_path_or_cycle(link: &Complex) -> bool {
    if link.dim() != Some(1) || !link.is_pure() {
        return false;
    }
    let mut degree: BTreeMap<Label, usize> = BTreeMap::new();
    for edge in link.facets() {
        for v in edge.vertices() {
            *degree.entry(v.clone()).or_insert(0) += 1;
        }
    }
    if degree.values().any(|&d| d > 2) {
        return false;
    }
    let endpoints = degree.values().filter(|&&d| d == 1).count();
    (endpoints == 0 || endpoints == 2) && link.is_connected()
}

/// Orientability via orientation propagation: assign each triangle one of two
/// orientations so that adjacent triangles induce opposite directions on
/// their shared edge.  Succeeds on every connected component or fails.
fn is_orientable(c: &Complex) -> bool {
    // Direction that edge {x,y} (x < y) receives from the triangle
    // [v0 < v1 < v2] taken with positive orientation (v0, v1, v2):
    // +1 for (v0,v1) and (v1,v2), -1 for (v2,v0).
    fn induced(tri: &Face, edge: &Face) -> i8 {
        let vs = tri.vertices();
        if edge.contains(&vs[0]) && edge.contains(&vs[2]) {
            -1
        } else {
            1
        }
    }

    let mut orientation: BTreeMap<Face, i8> = BTreeMap::new();
    for seed in c.facets() {
        if orientation.contains_key(seed) {
            continue;
        }
        orientation.insert(seed.clone(), 1);
        let mut stack = vec![seed.clone()];
        while let Some(tri) = stack.pop() {
            let sign = orientation[&tri];
            for edge in tri.ridges() {
                for other in c.triangles_containing(&edge) {
                    if other == tri {
                        continue;
                    }
                    let forced = -sign * induced(&tri, &edge) * induced(&other, &edge);
                    match orientation.get(&other) {
                        None => {
                            orientation.insert(other.clone(), forced);
                            stack.push(other);
                        }
                        Some(&have) if have != forced => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}
