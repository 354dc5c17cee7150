//! Generators: barycentric subdivision and seeded random disks and graphs.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;

/// Barycentric subdivision: one vertex per nonempty face, one facet per
/// maximal chain of faces.  A facet of dimension d yields (d+1)! simplices.
pub fn barycentric_subdivision(c: &Complex) -> Complex {
    let mut facets: Vec<Face> = Vec::new();
    for f in c.facets() {
        if f.is_empty() {
            facets.push(Face::empty());
            continue;
        }
        let vs = f.vertices();
        for perm in vs.iter().permutations(vs.len()) {
            let mut prefix: Vec<Label> = Vec::new();
            let mut chain: Vec<Label> = Vec::new();
            for v in perm {
                prefix.push((*v).clone());
                chain.push(face_label(&prefix));
            }
            facets.push(Face::new(chain));
        }
    }
    Complex::closure(facets)
}

/// The subdivision vertex standing for a face: the face's own label for
/// singletons, a set label otherwise.
fn face_label(vertices: &[Label]) -> Label {
    if vertices.len() == 1 {
        vertices[0].clone()
    } else {
        Label::set(vertices.to_vec())
    }
}

/// A stacked triangulated polygon with `k` triangles: start from one triangle
/// and repeatedly cone a random boundary edge over a new vertex.  Always a
/// disk.
pub fn random_disk(seed: u64, k: usize) -> Complex {
    assert!(k >= 1, "a disk needs at least one triangle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = |i: usize| Label::atom(&format!("p{i}"));

    let mut triangles = vec![Face::new(vec![p(1), p(2), p(3)])];
    // Boundary cycle as a vertex sequence; edge i joins boundary[i] and
    // boundary[i+1] (cyclically).
    let mut boundary = vec![p(1), p(2), p(3)];
    for step in 0..k - 1 {
        let i = rng.gen_range(0..boundary.len());
        let a = boundary[i].clone();
        let b = boundary[(i + 1) % boundary.len()].clone();
        let fresh = p(4 + step);
        triangles.push(Face::new(vec![a, b, fresh.clone()]));
        boundary.insert(i + 1, fresh);
    }
    Complex::closure(triangles)
}

/// A uniformly random simple graph on vertices e1…en with m distinct edges.
pub fn random_graph(seed: u64, n: usize, m: usize) -> Complex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = |i: usize| Label::atom(&format!("e{i}"));
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    assert!(m <= pairs.len(), "too many edges requested");
    let chosen = pairs.iter().choose_multiple(&mut rng, m);
    let edges: BTreeSet<Face> = chosen
        .into_iter()
        .map(|&(i, j)| Face::new(vec![v(i), v(j)]))
        .collect();
    Complex::closure(edges.into_iter().collect())
}
