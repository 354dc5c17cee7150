//! Shared helpers for the integration suites: an independent brute-force
//! partitionability oracle and deterministic random generators.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relpart::complex::Complex;
use relpart::face::Face;
use relpart::label::Label;
use relpart::relative::RelComplex;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Brute-force partitionability decision, written independently of the
/// library's solver: each facet in turn picks a minimum among the relative
/// faces under it, intervals are kept disjoint, and at the end the cover
/// must be exact. No h-vector shortcut, no exact-cover machinery.
pub fn oracle_partitionable(rc: &RelComplex) -> bool {
    let all: Vec<Face> = rc.faces().iter().cloned().collect();
    let facets: Vec<Face> = rc.facets();

    fn go(
        i: usize,
        facets: &[Face],
        all: &[Face],
        rc: &RelComplex,
        covered: &mut BTreeSet<Face>,
    ) -> bool {
        if i == facets.len() {
            return covered.len() == all.len();
        }
        let sigma = &facets[i];
        for r in sigma.subsets() {
            if !rc.contains(&r) {
                continue;
            }
            let members: Vec<&Face> = all
                .iter()
                .filter(|f| r.is_subset_of(f) && f.is_subset_of(sigma))
                .collect();
            if members.iter().any(|f| covered.contains(*f)) {
                continue;
            }
            for f in &members {
                covered.insert((*f).clone());
            }
            if go(i + 1, facets, all, rc, covered) {
                return true;
            }
            for f in &members {
                covered.remove(*f);
            }
        }
        false
    }

    go(0, &facets, &all, rc, &mut BTreeSet::new())
}

fn numbered(i: usize) -> Label {
    Label::atom(&i.to_string())
}

/// A random pure complex of dimension 1 or 2 over a small vertex pool.
pub fn random_pure_total(rng: &mut ChaCha8Rng) -> Complex {
    let d: usize = if rng.gen_bool(0.5) { 1 } else { 2 };
    random_pure_total_of_dim(rng, d)
}

/// The same generator with the dimension pinned.
pub fn random_pure_total_of_dim(rng: &mut ChaCha8Rng, d: usize) -> Complex {
    let pool = rng.gen_range(d + 2..=d + 5);
    let nf = if d == 1 {
        rng.gen_range(2..=5)
    } else {
        rng.gen_range(2..=3)
    };
    let mut facets: BTreeSet<Face> = BTreeSet::new();
    for _ in 0..nf {
        let mut idx: Vec<usize> = (1..=pool).collect();
        for j in 0..=d {
            let k = rng.gen_range(j..pool);
            idx.swap(j, k);
        }
        facets.insert(Face::new(idx[..=d].iter().map(|&i| numbered(i)).collect()));
    }
    Complex::closure(facets.into_iter().collect())
}

/// A random pure relative complex with at most `cap` positive-dimension
/// faces. The relative part is generated from proper faces only, so the
/// relative facets are exactly the total complex's facets.
pub fn random_pure_relative(rng: &mut ChaCha8Rng, cap: usize) -> RelComplex {
    loop {
        let total = random_pure_total(rng);
        let d = total.dim().unwrap();
        let gamma = match rng.gen_range(0..4) {
            0 => Complex::void(),
            1 => Complex::of_empty_face(),
            _ => {
                let picked: Vec<Face> = total
                    .faces()
                    .iter()
                    .filter(|f| f.dim() < d && rng.gen_bool(0.35))
                    .cloned()
                    .collect();
                if picked.is_empty() {
                    Complex::void()
                } else {
                    Complex::closure(picked)
                }
            }
        };
        let rc = RelComplex::new(total, gamma).unwrap();
        let positive = rc.faces().iter().filter(|f| f.dim() >= 1).count();
        if positive == 0 || positive > cap || !rc.is_pure() {
            continue;
        }
        return rc;
    }
}

/// A random tree on n vertices: each vertex after the first attaches to a
/// uniformly chosen earlier one.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Complex {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for i in 2..=n {
        let p = rng.gen_range(1..i);
        edges.push(Face::new(vec![numbered(i), numbered(p)]));
    }
    Complex::closure(edges)
}

/// A proper connected arc of the boundary cycle of a triangulated disk,
/// returned as a closed 1-complex.
pub fn random_boundary_arc(disk: &Complex, rng: &mut ChaCha8Rng) -> Complex {
    let bd = disk.boundary().expect("disk boundary");
    let edges: Vec<Face> = bd.facets().iter().cloned().collect();
    assert!(edges.len() >= 3, "boundary of a disk is a cycle");

    let len = rng.gen_range(1..edges.len());
    let start = rng.gen_range(0..edges.len());
    let mut arc = vec![edges[start].clone()];
    let mut prev = edges[start].vertices()[0].clone();
    let mut tip = edges[start].vertices()[1].clone();
    while arc.len() < len {
        let next = edges
            .iter()
            .find(|e| e.contains(&tip) && !e.contains(&prev) && !arc.contains(e))
            .expect("boundary cycle is 2-regular")
            .clone();
        prev = tip;
        tip = next
            .vertices()
            .iter()
            .find(|v| **v != prev)
            .unwrap()
            .clone();
        arc.push(next);
    }
    Complex::closure(arc)
}
