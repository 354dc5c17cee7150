//! Dunce-hat recognition and construction.
//!
//! A triangulated dunce hat is recognized purely combinatorially: the edges
//! with three incident triangles must form a single cycle (the singular
//! circle), χ must equal 1, vertices off the circle must have cycle links,
//! and circle vertices must have theta links — except exactly one corner
//! vertex whose link is two disjoint cycles joined by a path.
//!
//! `dunce_grid(n)` builds one by subdividing a triangle into n² cells and
//! identifying the three sides head-to-head-to-tail.  The raw identification
//! is not simplicial near two of the corners, so offending interior edges are
//! subdivided until the quotient map is injective on faces.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;

/// The distinguished corner vertex of a dunce hat together with the pieces of
/// its link: cycles `alpha` (through `x`) and `beta` (through `y`), and the
/// path `gamma` from `x` to `y`.
#[derive(Debug, Clone)]
pub struct CornerData {
    pub v: Label,
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
    pub x: Label,
    pub y: Label,
    pub singular_circle: Complex,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DunceViolation {
    #[error("complex is not pure 2-dimensional")]
    NotPureTwoDim,
    #[error("edge {{{0}}} lies in {1} triangles (expected 2 or 3)")]
    EdgeIncidence(Face, usize),
    #[error("no edge lies in exactly 3 triangles")]
    NoSingularEdges,
    #[error("the edges with 3 incident triangles do not form a single cycle")]
    SingularNotCircle,
    #[error("reduced Euler characteristic is {0}, expected 0")]
    EulerCharMismatch(i64),
    #[error("complex is not connected")]
    Disconnected,
    #[error("vertex {0} off the singular circle does not have a cycle link")]
    BadVertexLink(Label),
    #[error(
        "vertex {0} on the singular circle has neither a theta link nor the corner link shape"
    )]
    BadCircleVertexLink(Label),
    #[error("{0} circle vertices have the corner link shape (expected exactly 1)")]
    CornerCount(usize),
}

/// Check the dunce-hat conditions and return the corner structure.
pub fn validate_dunce_hat(c: &Complex) -> Result<CornerData, DunceViolation> {
    if c.dim() != Some(2) || !c.is_pure() {
        return Err(DunceViolation::NotPureTwoDim);
    }

    let mut singular = Vec::new();
    for edge in c.faces_of_dim(1) {
        match c.triangles_containing(&edge).len() {
            2 => {}
            3 => singular.push(edge),
            n => return Err(DunceViolation::EdgeIncidence(edge, n)),
        }
    }
    if singular.is_empty() {
        return Err(DunceViolation::NoSingularEdges);
    }
    let circle = Complex::closure(singular);
    if !is_single_cycle(&circle) {
        return Err(DunceViolation::SingularNotCircle);
    }

    let chi_reduced = c.euler_char_reduced();
    if chi_reduced != 0 {
        return Err(DunceViolation::EulerCharMismatch(chi_reduced));
    }
    if !c.is_connected() {
        return Err(DunceViolation::Disconnected);
    }

    let circle_vertices = circle.vertices();
    let mut corner: Option<(Label, CornerParts)> = None;
    let mut corner_count = 0usize;
    for v in c.vertices() {
        let link = c.link(&Face::singleton(v.clone())).expect("vertex of c");
        let shape = link_shape(&link);
        if circle_vertices.contains(&v) {
            match shape {
                LinkShape::Theta => {}
                LinkShape::Corner(parts) => {
                    corner_count += 1;
                    corner = Some((v, parts));
                }
                _ => return Err(DunceViolation::BadCircleVertexLink(v)),
            }
        } else if !matches!(shape, LinkShape::Cycle) {
            return Err(DunceViolation::BadVertexLink(v));
        }
    }
    if corner_count != 1 {
        return Err(DunceViolation::CornerCount(corner_count));
    }

    let (v, parts) = corner.expect("count is 1");
    // The two branch vertices of the corner link must be the circle
    // neighbours of v.
    for w in [&parts.x, &parts.y] {
        if !circle.contains(&Face::new(vec![v.clone(), (*w).clone()])) {
            return Err(DunceViolation::BadCircleVertexLink(v));
        }
    }

    Ok(CornerData {
        v,
        alpha: walk_complex(&parts.alpha),
        beta: walk_complex(&parts.beta),
        gamma: walk_complex(&parts.gamma),
        x: parts.x,
        y: parts.y,
        singular_circle: circle,
    })
}

struct CornerParts {
    x: Label,
    y: Label,
    alpha: Vec<Label>,
    beta: Vec<Label>,
    gamma: Vec<Label>,
}

enum LinkShape {
    Cycle,
    Theta,
    Corner(CornerParts),
    Other,
}

/// Classify a vertex link: a single cycle, a theta graph, the corner shape
/// (two disjoint cycles joined by a path), or anything else.
fn link_shape(link: &Complex) -> LinkShape {
    let Some(adj) = adjacency(link) else {
        return LinkShape::Other;
    };
    if adj.values().any(|nbrs| nbrs.len() != 2 && nbrs.len() != 3) {
        return LinkShape::Other;
    }
    let branch: Vec<Label> = adj
        .iter()
        .filter(|(_, nbrs)| nbrs.len() == 3)
        .map(|(v, _)| v.clone())
        .collect();
    let total_edges = link.facet_count();

    match branch.len() {
        0 => {
            if link.is_connected() {
                LinkShape::Cycle
            } else {
                LinkShape::Other
            }
        }
        2 => {
            let (p, q) = (branch[0].clone(), branch[1].clone());
            let walks: Vec<Vec<Label>> = adj[&p].iter().map(|n| chain_walk(&adj, &p, n)).collect();
            let (loops, crossings): (Vec<_>, Vec<_>) =
                walks.into_iter().partition(|w| w.last() == Some(&p));
            match crossings.len() {
                3 => {
                    // Theta: three internally disjoint p–q paths using every
                    // edge exactly once.
                    let used: usize = crossings.iter().map(|w| w.len() - 1).sum();
                    if used == total_edges {
                        LinkShape::Theta
                    } else {
                        LinkShape::Other
                    }
                }
                1 => {
                    // Candidate corner: the two loop walks traverse one cycle
                    // through p in both directions; the cycle through q is
                    // recovered by walking from q.
                    let alpha = loops[0].clone();
                    if vertex_set(&alpha) != vertex_set(&loops[1]) {
                        return LinkShape::Other;
                    }
                    let gamma = crossings[0].clone();
                    let q_walks: Vec<Vec<Label>> =
                        adj[&q].iter().map(|n| chain_walk(&adj, &q, n)).collect();
                    let q_loops: Vec<Vec<Label>> = q_walks
                        .into_iter()
                        .filter(|w| w.last() == Some(&q))
                        .collect();
                    if q_loops.len() != 2 || vertex_set(&q_loops[0]) != vertex_set(&q_loops[1]) {
                        return LinkShape::Other;
                    }
                    let beta = q_loops[0].clone();

                    let alpha_set = vertex_set(&alpha);
                    let beta_set = vertex_set(&beta);
                    if !alpha_set.is_disjoint(&beta_set) {
                        return LinkShape::Other;
                    }
                    let gamma_interior: BTreeSet<Label> =
                        gamma[1..gamma.len() - 1].iter().cloned().collect();
                    if !gamma_interior.is_disjoint(&alpha_set)
                        || !gamma_interior.is_disjoint(&beta_set)
                    {
                        return LinkShape::Other;
                    }
                    let used = (alpha.len() - 1) + (beta.len() - 1) + (gamma.len() - 1);
                    if used != total_edges {
                        return LinkShape::Other;
                    }
                    LinkShape::Corner(CornerParts {
                        x: p,
                        y: q,
                        alpha,
                        beta,
                        gamma,
                    })
                }
                _ => LinkShape::Other,
            }
        }
        _ => LinkShape::Other,
    }
}

/// Neighbour lists of a pure 1-complex; None if the link is not a graph.
fn adjacency(link: &Complex) -> Option<BTreeMap<Label, Vec<Label>>> {
    if link.dim() != Some(1) || !link.is_pure() {
        return None;
    }
    let mut adj: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for e in link.facets() {
        let vs = e.vertices();
        adj.entry(vs[0].clone()).or_default().push(vs[1].clone());
        adj.entry(vs[1].clone()).or_default().push(vs[0].clone());
    }
    for nbrs in adj.values_mut() {
        nbrs.sort();
    }
    Some(adj)
}

/// Follow the degree-2 chain starting with the edge `start`–`first` until a
/// branch vertex (degree ≠ 2) is reached.  Returns the full vertex walk.
fn chain_walk(adj: &BTreeMap<Label, Vec<Label>>, start: &Label, first: &Label) -> Vec<Label> {
    let mut walk = vec![start.clone(), first.clone()];
    let mut prev = start.clone();
    let mut cur = first.clone();
    while adj[&cur].len() == 2 {
        let nbrs = &adj[&cur];
        let next = if nbrs[0] == prev {
            nbrs[1].clone()
        } else {
            nbrs[0].clone()
        };
        walk.push(next.clone());
        prev = cur;
        cur = next;
    }
    walk
}

fn vertex_set(walk: &[Label]) -> BTreeSet<Label> {
    walk.iter().cloned().collect()
}

fn walk_complex(walk: &[Label]) -> Complex {
    Complex::closure(
        walk.windows(2)
            .map(|w| Face::new(vec![w[0].clone(), w[1].clone()]))
            .collect(),
    )
}

fn is_single_cycle(c: &Complex) -> bool {
    let Some(adj) = adjacency(c) else {
        return false;
    };
    adj.values().all(|nbrs| nbrs.len() == 2) && c.is_connected()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialityFailure {
    #[error("side edge {{{0}}} joins vertices identified to the same point")]
    DegenerateSideEdge(Face),
    #[error("faces {{{0}}} and {{{1}}} are identified and cannot be separated by subdivision")]
    UnrepairableCollision(Face, Face),
    #[error("edge repairs did not stabilize after {0} steps")]
    RepairDivergence(usize),
    #[error("identified complex fails the dunce-hat checks: {0}")]
    Invalid(#[from] DunceViolation),
}

/// Triangulate the dunce hat on an n×n grid.
///
/// A triangle is subdivided into n² cells; its three sides are identified to
/// a single n-edge circle q0…q(n-1) so that two sides run head-to-head at one
/// corner and head-to-tail at the others.  Interior edges whose endpoints or
/// images would collide under the quotient are subdivided (twice when the
/// endpoints are identified with each other, once otherwise) until the
/// quotient map is simplicial and injective on faces.  The result is gated by
/// [`validate_dunce_hat`].
pub fn dunce_grid(n: u32) -> Result<Complex, SimplicialityFailure> {
    assert!(n >= 1, "grid size must be positive");
    let gv = |r: u32, k: u32| Label::atom(&format!("g{r}.{k}"));
    let q = |i: u32| Label::atom(&format!("q{}", i % n));

    let mut tris: BTreeSet<Face> = BTreeSet::new();
    for r in 0..n {
        for k in 0..=r {
            tris.insert(Face::new(vec![gv(r, k), gv(r + 1, k), gv(r + 1, k + 1)]));
        }
        for k in 0..r {
            tris.insert(Face::new(vec![gv(r, k), gv(r, k + 1), gv(r + 1, k + 1)]));
        }
    }

    // All three sides map onto the same directed path q0 → q1 → … → q0:
    // left side top-down, bottom side left-right, and the diagonal top-down.
    let mut phi: BTreeMap<Label, Label> = BTreeMap::new();
    for r in 0..=n {
        phi.insert(gv(r, 0), q(r));
        phi.insert(gv(n, r), q(r));
        phi.insert(gv(r, r), q(r));
    }

    let mut side: BTreeSet<Face> = BTreeSet::new();
    for r in 0..n {
        side.insert(Face::new(vec![gv(r, 0), gv(r + 1, 0)]));
        side.insert(Face::new(vec![gv(n, r), gv(n, r + 1)]));
        side.insert(Face::new(vec![gv(r, r), gv(r + 1, r + 1)]));
    }

    let circle_edges: BTreeSet<Face> = (0..n).map(|i| Face::new(vec![q(i), q(i + 1)])).collect();

    let image_of = |f: &Face, phi: &BTreeMap<Label, Label>| {
        f.map(&|l| phi.get(l).cloned().unwrap_or_else(|| l.clone()))
    };

    let mut fresh = 0u32;
    let mut steps = 0usize;
    let cap = 200 + 50 * (n as usize).pow(2);
    'repair: loop {
        steps += 1;
        if steps > cap {
            return Err(SimplicialityFailure::RepairDivergence(steps));
        }
        let complex = Complex::closure(tris.iter().cloned().collect());

        // Edges whose endpoints are identified with each other would become
        // vertices; two inserted midpoints keep the three resulting edges
        // pairwise distinct under the quotient.
        for edge in complex.faces_of_dim(1) {
            let vs = edge.vertices();
            let a = phi.get(&vs[0]).unwrap_or(&vs[0]);
            let b = phi.get(&vs[1]).unwrap_or(&vs[1]);
            if a == b {
                if side.contains(&edge) {
                    return Err(SimplicialityFailure::DegenerateSideEdge(edge));
                }
                subdivide_edge(&mut tris, &complex, &edge, 2, &mut fresh);
                continue 'repair;
            }
        }

        // Distinct edges with a common image: allowed only for the intended
        // triples of side edges over a circle edge.  Otherwise subdivide one
        // offending non-side edge.
        let mut edge_groups: BTreeMap<Face, Vec<Face>> = BTreeMap::new();
        for edge in complex.faces_of_dim(1) {
            edge_groups
                .entry(image_of(&edge, &phi))
                .or_default()
                .push(edge);
        }
        for (image, members) in &edge_groups {
            let (sides, interior): (Vec<&Face>, Vec<&Face>) =
                members.iter().partition(|e| side.contains(e));
            if sides.is_empty() && members.len() == 1 {
                continue;
            }
            if sides.len() == 3 && interior.is_empty() && circle_edges.contains(image) {
                continue;
            }
            match interior.first() {
                Some(edge) => {
                    subdivide_edge(&mut tris, &complex, edge, 1, &mut fresh);
                    continue 'repair;
                }
                None => {
                    return Err(SimplicialityFailure::UnrepairableCollision(
                        members[0].clone(),
                        members[1].clone(),
                    ))
                }
            }
        }

        // Distinct triangles with a common image.
        let mut tri_groups: BTreeMap<Face, Vec<Face>> = BTreeMap::new();
        for t in &tris {
            tri_groups
                .entry(image_of(t, &phi))
                .or_default()
                .push(t.clone());
        }
        for members in tri_groups.values() {
            if members.len() < 2 {
                continue;
            }
            let victim = members
                .iter()
                .flat_map(|t| t.ridges())
                .find(|e| !side.contains(e));
            match victim {
                Some(edge) => {
                    subdivide_edge(&mut tris, &complex, &edge, 1, &mut fresh);
                    continue 'repair;
                }
                None => {
                    return Err(SimplicialityFailure::UnrepairableCollision(
                        members[0].clone(),
                        members[1].clone(),
                    ))
                }
            }
        }

        break;
    }

    let quotient = Complex::closure(tris.iter().map(|t| image_of(t, &phi)).collect());
    assert_eq!(
        quotient.facet_count(),
        tris.len(),
        "repair loop left a facet collision"
    );
    validate_dunce_hat(&quotient)?;
    Ok(quotient)
}

/// Replace edge `e` by a chain with `parts` segments (1 or 2 inserted
/// midpoints), splitting each incident triangle accordingly.
fn subdivide_edge(
    tris: &mut BTreeSet<Face>,
    complex: &Complex,
    e: &Face,
    midpoints: u32,
    fresh: &mut u32,
) {
    let vs = e.vertices();
    let mut chain = vec![vs[0].clone()];
    for _ in 0..midpoints {
        chain.push(Label::atom(&format!("s{fresh}")));
        *fresh += 1;
    }
    chain.push(vs[1].clone());
    for t in complex.triangles_containing(e) {
        let apex = t.minus(e);
        assert_eq!(apex.dim(), 0);
        let apex = apex.vertices()[0].clone();
        tris.remove(&t);
        for pair in chain.windows(2) {
            tris.insert(Face::new(vec![
                pair[0].clone(),
                pair[1].clone(),
                apex.clone(),
            ]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::barycentric_subdivision;
    use crate::corpus::{mobius5, rp2_min};

    #[test]
    fn grid_3_is_a_dunce_hat() {
        let z = dunce_grid(3).unwrap();
        let corner = validate_dunce_hat(&z).unwrap();
        assert_eq!(corner.v, Label::atom("q0"));
        assert_eq!(corner.singular_circle.vertices().len(), 3);
        assert!(corner.alpha.vertices().is_disjoint(&corner.beta.vertices()));
        assert!(corner.x < corner.y);
    }

    #[test]
    fn grid_4_and_5_are_dunce_hats() {
        for n in [4, 5] {
            let z = dunce_grid(n).unwrap();
            let corner = validate_dunce_hat(&z).unwrap();
            assert_eq!(corner.singular_circle.vertices().len(), n as usize);
        }
    }

    #[test]
    fn grid_2_fails_loudly() {
        assert!(dunce_grid(2).is_err());
        assert!(dunce_grid(1).is_err());
    }

    #[test]
    fn surfaces_are_not_dunce_hats() {
        assert_eq!(
            validate_dunce_hat(&rp2_min()).err(),
            Some(DunceViolation::NoSingularEdges)
        );
        // A surface with boundary fails on its boundary edges first.
        assert_eq!(
            validate_dunce_hat(&mobius5()).err(),
            Some(DunceViolation::EdgeIncidence(Face::parse("13"), 1))
        );
    }

    #[test]
    fn subdivided_grid_is_still_a_dunce_hat() {
        let z = dunce_grid(3).unwrap();
        let sd = barycentric_subdivision(&z);
        let corner = validate_dunce_hat(&sd).unwrap();
        // Subdivision keeps original vertices, so the corner is preserved.
        assert_eq!(corner.v, Label::atom("q0"));
        assert_eq!(corner.singular_circle.vertices().len(), 6);
    }
}
