//! Partitioning a triangulated annulus: cut it open along a shortest
//! 1-skeleton path joining the two boundary circles, shell the resulting
//! disk, and fold back. The relative structure of the result — nothing, the
//! whole boundary, or one of the two circles — is controlled by which part
//! of the disk's rim the shelling is taken relative to.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::assembly::{cut, fold_scheme, make_folding_map};
use crate::complex::Complex;
use crate::corpus::{classify_surface, SurfaceKind};
use crate::face::Face;
use crate::label::Label;
use crate::relative::RelComplex;
use crate::scheme::{scheme_from_shelling, PartitionScheme};

use super::disk::shell_disk_relative;

#[derive(Debug, Clone)]
pub enum AnnulusMode {
    RelEmpty,
    RelFullBoundary,
    /// Relative to one boundary circle, given as a complex.
    RelOneCycle(Complex),
}

#[derive(Debug, Error)]
pub enum AnnulusError {
    #[error("not an annulus: {0}")]
    NotAnAnnulus(String),
    #[error("the given cycle is not a boundary component of the annulus")]
    CycleNotBoundary,
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

fn sv(stage: &str, detail: impl std::fmt::Display) -> AnnulusError {
    AnnulusError::StructureViolation(format!("{stage}: {detail}"))
}

/// Verified scheme for (a, Γ) with Γ determined by `mode`: {∅}, the full
/// boundary, or one boundary circle.
pub fn partition_annulus(a: &Complex, mode: &AnnulusMode) -> Result<PartitionScheme, AnnulusError> {
    match classify_surface(a) {
        Ok(c) if c.kind == SurfaceKind::Annulus => {}
        Ok(c) => return Err(AnnulusError::NotAnAnnulus(c.to_string())),
        Err(e) => return Err(AnnulusError::NotAnAnnulus(e.to_string())),
    }
    let bd = a.boundary().map_err(|e| sv("boundary", e))?;
    let circles = bd.vertex_components();
    if circles.len() != 2 {
        return Err(sv("boundary", format!("{} components", circles.len())));
    }
    if let AnnulusMode::RelOneCycle(c) = mode {
        if c != &circles[0] && c != &circles[1] {
            return Err(AnnulusError::CycleNotBoundary);
        }
    }

    let path = shortest_crossing(a, &circles[0], &circles[1])?;
    let locus = Complex::closure(
        path.windows(2)
            .map(|w| Face::new(vec![w[0].clone(), w[1].clone()]))
            .collect(),
    );
    let res = cut(a, &locus).map_err(|e| sv("cut", e))?;
    let d = res.complex;
    match classify_surface(&d) {
        Ok(c) if c.kind == SurfaceKind::Disk => {}
        other => return Err(sv("cut", format!("opened into {other:?}"))),
    }
    let dbd = d.boundary().map_err(|e| sv("cut boundary", e))?;
    let rim: Vec<Face> = dbd.faces_of_dim(1);
    let unfold = |f: &Face| f.map(&|v| res.fold_back[v].clone());

    // The crossing path lifts to the two seams of the slit.
    let mut seams: Vec<Complex> = Complex::closure(
        rim.iter()
            .filter(|e| locus.contains(&unfold(e)))
            .cloned()
            .collect(),
    )
    .vertex_components();
    if seams.len() != 2 {
        return Err(sv("cut", format!("{} seams", seams.len())));
    }
    seams.sort_by_key(|s| s.faces_of_dim(1).first().cloned());

    let ups = match mode {
        AnnulusMode::RelEmpty => seams[0].clone(),
        AnnulusMode::RelFullBoundary => Complex::closure(
            rim.iter()
                .filter(|e| !seams[1].contains(e))
                .cloned()
                .collect(),
        ),
        AnnulusMode::RelOneCycle(c) => {
            let lifted = Complex::closure(
                rim.iter()
                    .filter(|e| c.contains(&unfold(e)))
                    .cloned()
                    .collect(),
            );
            lifted.union(&seams[0])
        }
    };

    let order = shell_disk_relative(&d, &ups).map_err(|e| sv("shell", e))?;
    let rc = RelComplex::new(d.clone(), ups).map_err(|e| sv("cut pair", e))?;
    let scheme = scheme_from_shelling(&rc, &order).map_err(|e| sv("scheme", e))?;
    let fmap = make_folding_map(&rc, &res.fold_back).map_err(|e| sv("fold", e))?;
    let gamma = match mode {
        AnnulusMode::RelEmpty => Complex::of_empty_face(),
        AnnulusMode::RelFullBoundary => bd,
        AnnulusMode::RelOneCycle(c) => c.clone(),
    };
    let target = RelComplex::new(a.clone(), gamma).map_err(|e| sv("target", e))?;
    if fmap.target() != &target {
        return Err(sv("fold", "cut does not fold back onto the wanted pair"));
    }
    fold_scheme(&fmap, &scheme).map_err(|e| sv("fold scheme", e))
}

/// Shortest path in the 1-skeleton from one vertex set to the other,
/// breadth-first with lexicographic tie-breaking. The interior of such a
/// path avoids both circles, so it is a clean crossing arc.
fn shortest_crossing(
    a: &Complex,
    from: &Complex,
    to: &Complex,
) -> Result<Vec<Label>, AnnulusError> {
    let mut adj: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for e in a.faces_of_dim(1) {
        let vs = e.vertices();
        adj.entry(vs[0].clone()).or_default().push(vs[1].clone());
        adj.entry(vs[1].clone()).or_default().push(vs[0].clone());
    }
    for ns in adj.values_mut() {
        ns.sort();
    }
    let sources: BTreeSet<Label> = from.vertices();
    let targets: BTreeSet<Label> = to.vertices();

    let mut parent: BTreeMap<Label, Option<Label>> = BTreeMap::new();
    let mut queue: VecDeque<Label> = VecDeque::new();
    for s in &sources {
        parent.insert(s.clone(), None);
        queue.push_back(s.clone());
    }
    while let Some(v) = queue.pop_front() {
        if targets.contains(&v) {
            let mut path = vec![v.clone()];
            let mut cur = v;
            while let Some(Some(p)) = parent.get(&cur).cloned() {
                path.push(p.clone());
                cur = p;
            }
            path.reverse();
            return Ok(path);
        }
        for w in adj.get(&v).into_iter().flatten() {
            if !parent.contains_key(w) {
                parent.insert(w.clone(), Some(v.clone()));
                queue.push_back(w.clone());
            }
        }
    }
    Err(sv(
        "crossing",
        "boundary circles are not connected through the strip",
    ))
}
