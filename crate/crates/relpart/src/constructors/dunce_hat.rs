//! Partitioning a triangulation of the dunce hat. Cutting along the singular
//! circle unfolds the complex into a disk whose boundary carries three copies
//! of the circle; deleting the three copies of the corner vertex and shelling
//! what remains (relative to two of the three stretches between them) folds
//! back onto the deletion of the corner relative to its link. Gluing the cone
//! over the link on top of that — shelled edge by edge — covers the whole
//! space. A variant keeps all three corner copies in the carried path and
//! lands on the complex relative to the corner vertex itself.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::assembly::{cut, fold_scheme, glue_shelling_like, make_folding_map, Partitioned};
use crate::complex::Complex;
use crate::corpus::{
    classify_surface, validate_dunce_hat, CornerData, DunceViolation, SurfaceKind,
};
use crate::face::Face;
use crate::label::Label;
use crate::relative::RelComplex;
use crate::scheme::{scheme_from_shelling, PartitionScheme, ShellingOrder};

use super::disk::shell_disk_relative;

#[derive(Debug, Error)]
pub enum DunceError {
    #[error("not a dunce hat: {0}")]
    Invalid(#[from] DunceViolation),
    #[error("no singular circle: {0}")]
    NoSingularCircle(DunceViolation),
    #[error("corner vertex is ambiguous: {0} candidates")]
    CornerAmbiguous(usize),
    #[error("cutting did not produce a disk: {0}")]
    DiskAssertionFailure(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

fn sv(stage: &str, detail: impl std::fmt::Display) -> DunceError {
    DunceError::StructureViolation(format!("{stage}: {detail}"))
}

/// Locate the corner vertex and the two loops and connecting path of its
/// link, rejecting complexes without the dunce hat's singular structure.
pub fn detect_corner(z: &Complex) -> Result<CornerData, DunceError> {
    validate_dunce_hat(z).map_err(|v| match v {
        DunceViolation::NoSingularEdges | DunceViolation::SingularNotCircle => {
            DunceError::NoSingularCircle(v)
        }
        DunceViolation::CornerCount(n) => DunceError::CornerAmbiguous(n),
        other => DunceError::Invalid(other),
    })
}

fn cut_to_disk(
    z: &Complex,
    cd: &CornerData,
) -> Result<(Complex, BTreeMap<Label, Label>), DunceError> {
    let res = cut(z, &cd.singular_circle).map_err(|e| sv("cut", e))?;
    match classify_surface(&res.complex) {
        Ok(c) if c.kind == SurfaceKind::Disk => {}
        Ok(c) => return Err(DunceError::DiskAssertionFailure(c.to_string())),
        Err(e) => return Err(DunceError::DiskAssertionFailure(e.to_string())),
    }
    Ok((res.complex, res.fold_back))
}

fn corner_copies(
    d: &Complex,
    fold_back: &BTreeMap<Label, Label>,
    v: &Label,
) -> Result<Vec<Label>, DunceError> {
    let copies: Vec<Label> = d
        .vertices()
        .into_iter()
        .filter(|l| fold_back[l] == *v)
        .collect();
    if copies.len() != 3 {
        return Err(sv(
            "corner copies",
            format!("expected 3 copies of {v}, found {}", copies.len()),
        ));
    }
    Ok(copies)
}

/// Greedy shelling of a connected graph: start at the lexicographically
/// smallest edge, repeatedly take the smallest edge touching the span so far.
fn graph_shelling(g: &Complex) -> Result<ShellingOrder, DunceError> {
    let mut remaining: Vec<Face> = g.facets().iter().cloned().collect();
    let mut order = Vec::new();
    let mut visited: Vec<Label> = Vec::new();
    while !remaining.is_empty() {
        let pick = if order.is_empty() {
            0
        } else {
            remaining
                .iter()
                .position(|e| e.vertices().iter().any(|l| visited.contains(l)))
                .ok_or_else(|| sv("link shelling", "link graph is disconnected"))?
        };
        let e = remaining.remove(pick);
        for l in e.vertices() {
            if !visited.contains(l) {
                visited.push(l.clone());
            }
        }
        order.push(e);
    }
    Ok(ShellingOrder::new(order))
}

struct DeletionPiece {
    complex: RelComplex,
    scheme: PartitionScheme,
}

/// Shared trunk: cut along the circle, peel the corner copies, and shell what
/// is left relative to the boundary minus one of the three stretches (plain
/// mode) or minus one of the three arcs between corner copies (corner mode),
/// folding the result back down.
fn deletion_piece(
    z: &Complex,
    cd: &CornerData,
    keep_corner: bool,
) -> Result<DeletionPiece, DunceError> {
    let (d, fold_back) = cut_to_disk(z, cd)?;
    let copies = corner_copies(&d, &fold_back, &cd.v)?;

    let (t, ups) = if keep_corner {
        // Arcs of ∂D between consecutive corner copies: join boundary edges
        // whenever they share a vertex that is not a corner copy.
        let bd = d.boundary().map_err(|e| sv("disk boundary", e))?;
        let bd_edges: Vec<Face> = bd.faces_of_dim(1);
        let mut arcs: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; bd_edges.len()];
        for start in 0..bd_edges.len() {
            if assigned[start] {
                continue;
            }
            let mut comp = vec![start];
            assigned[start] = true;
            let mut frontier = vec![start];
            while let Some(i) = frontier.pop() {
                for j in 0..bd_edges.len() {
                    if assigned[j] {
                        continue;
                    }
                    let shared = bd_edges[i].intersection(&bd_edges[j]);
                    let joins = shared.vertices().iter().any(|l| !copies.contains(l));
                    if joins {
                        assigned[j] = true;
                        comp.push(j);
                        frontier.push(j);
                    }
                }
            }
            comp.sort();
            arcs.push(comp);
        }
        if arcs.len() != 3 {
            return Err(sv(
                "boundary arcs",
                format!(
                    "expected 3 arcs between corner copies, found {}",
                    arcs.len()
                ),
            ));
        }
        arcs.sort_by_key(|c| bd_edges[c[0]].clone());
        let kept: Vec<Face> = arcs[1]
            .iter()
            .chain(arcs[2].iter())
            .map(|&i| bd_edges[i].clone())
            .collect();
        (d.clone(), Complex::closure(kept))
    } else {
        // Record the three link paths first; the copies are pairwise
        // non-adjacent (the circle has at least three vertices), so each
        // path survives the other deletions untouched.
        let mut link_paths: Vec<Complex> = Vec::new();
        for c in &copies {
            link_paths.push(
                d.link(&Face::singleton(c.clone()))
                    .map_err(|e| sv("corner links", e))?,
            );
        }
        let mut t = d.clone();
        for c in &copies {
            t = t
                .deletion(&Face::singleton(c.clone()))
                .map_err(|e| sv("corner deletion", e))?;
            match classify_surface(&t) {
                Ok(cl) if cl.kind == SurfaceKind::Disk => {}
                Ok(cl) => return Err(DunceError::DiskAssertionFailure(cl.to_string())),
                Err(e) => return Err(DunceError::DiskAssertionFailure(e.to_string())),
            }
        }
        // Boundary edges of T in no link path are the stretches the corner
        // deletions exposed; there is one per copy.
        let bd = t.boundary().map_err(|e| sv("trimmed boundary", e))?;
        let stretch: Vec<Face> = bd
            .faces_of_dim(1)
            .into_iter()
            .filter(|e| !link_paths.iter().any(|p| p.contains(e)))
            .collect();
        let mut comps = Complex::closure(stretch).vertex_components();
        if comps.len() != 3 {
            return Err(sv(
                "stretches",
                format!("expected 3 boundary stretches, found {}", comps.len()),
            ));
        }
        comps.sort_by_key(|c| c.faces_of_dim(1).first().cloned());
        let excluded = &comps[0];
        let kept: Vec<Face> = bd
            .faces_of_dim(1)
            .into_iter()
            .filter(|e| !excluded.contains(e))
            .collect();
        (t, Complex::closure(kept))
    };

    let order = shell_disk_relative(&t, &ups).map_err(|e| sv("shelling", e))?;
    let rc = RelComplex::new(t, ups).map_err(|e| sv("relative piece", e))?;
    let scheme = scheme_from_shelling(&rc, &order).map_err(|e| sv("shelling", e))?;
    let fmap = make_folding_map(&rc, &fold_back).map_err(|e| sv("folding", e))?;

    let expected = if keep_corner {
        RelComplex::new(
            z.clone(),
            Complex::closure(vec![Face::singleton(cd.v.clone())]),
        )
        .map_err(|e| sv("folding", e))?
    } else {
        let corner = Face::singleton(cd.v.clone());
        let del = z.deletion(&corner).map_err(|e| sv("folding", e))?;
        let lk = z.link(&corner).map_err(|e| sv("folding", e))?;
        RelComplex::new(del, lk).map_err(|e| sv("folding", e))?
    };
    if *fmap.target() != expected {
        return Err(sv("folding", "cut pieces do not fold back onto the space"));
    }
    let scheme = fold_scheme(&fmap, &scheme).map_err(|e| sv("folding", e))?;
    Ok(DeletionPiece {
        complex: expected,
        scheme,
    })
}

/// Verified scheme for (z, ∅): the deletion of the corner relative to its
/// link, plus the cone over the link glued back on top.
pub fn partition_dunce_hat(z: &Complex) -> Result<PartitionScheme, DunceError> {
    let cd = detect_corner(z)?;
    let piece = deletion_piece(z, &cd, false)?;

    let corner = Face::singleton(cd.v.clone());
    let lk = z.link(&corner).map_err(|e| sv("cone", e))?;
    let cone = lk.cone(&cd.v).map_err(|e| sv("cone", e))?;
    let star = Complex::closure(z.triangles_containing(&corner));
    if cone != star {
        return Err(sv("cone", "the corner's star is not a cone over its link"));
    }
    let lk_order = graph_shelling(&lk)?;
    let cone_order = ShellingOrder::new(
        lk_order
            .order
            .iter()
            .map(|e| e.with_vertex(&cd.v))
            .collect(),
    );
    let rc_a = RelComplex::plain(cone);
    let scheme_a = scheme_from_shelling(&rc_a, &cone_order).map_err(|e| sv("cone", e))?;
    let a = Partitioned::new(rc_a, scheme_a, Some(cone_order)).map_err(|e| sv("cone", e))?;

    let del = piece.complex.total().clone();
    let res = glue_shelling_like(&a, &del, &Complex::void(), Some(&piece.scheme), None)
        .map_err(|e| sv("glue", e))?;
    if res.combined != RelComplex::plain(z.clone()) {
        return Err(sv("glue", "pieces do not reassemble the space"));
    }
    Ok(res.scheme)
}

/// Verified scheme for (z, ⟨{corner}⟩), keeping all three corner copies in
/// the carried boundary path.
pub fn partition_dunce_hat_rel_corner(z: &Complex) -> Result<PartitionScheme, DunceError> {
    let cd = detect_corner(z)?;
    let piece = deletion_piece(z, &cd, true)?;
    Ok(piece.scheme)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{barycentric_subdivision, dunce_grid, mobius5, rp2_min};
    use crate::scheme::interval_stats;
    use crate::vectors::h_vector;

    #[test]
    fn grid_hats_partition() {
        for n in 3..=4 {
            let z = dunce_grid(n).unwrap();
            let scheme = partition_dunce_hat(&z).unwrap();
            let rc = RelComplex::plain(z);
            assert_eq!(interval_stats(&scheme), h_vector(&rc));
        }
    }

    #[test]
    fn subdivided_hat_partitions() {
        let z = barycentric_subdivision(&dunce_grid(3).unwrap());
        let scheme = partition_dunce_hat(&z).unwrap();
        assert_eq!(interval_stats(&scheme), h_vector(&RelComplex::plain(z)));
    }

    #[test]
    fn relative_to_the_corner() {
        let z = dunce_grid(3).unwrap();
        let cd = detect_corner(&z).unwrap();
        let scheme = partition_dunce_hat_rel_corner(&z).unwrap();
        let rc = RelComplex::new(z, Complex::closure(vec![Face::singleton(cd.v)])).unwrap();
        assert_eq!(interval_stats(&scheme), h_vector(&rc));
    }

    #[test]
    fn rejects_non_hats() {
        let err = detect_corner(&rp2_min()).unwrap_err();
        assert!(matches!(err, DunceError::NoSingularCircle(_)));

        let err = detect_corner(&mobius5()).unwrap_err();
        assert!(matches!(err, DunceError::Invalid(_)));
    }
}
