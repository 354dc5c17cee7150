//! Partitioning a triangulated Möbius strip, relative to its whole boundary
//! or to {∅}.
//!
//! Both constructions peel boundary triangles off the strip — which stays a
//! Möbius strip throughout — until one shows up with a single boundary edge,
//! all three vertices on the boundary, and an interior edge that cuts the
//! strip open into a disk. (The two interior edges of such a triangle are
//! homologous rel boundary, so they either both cross the strip's core or
//! both chop off a mere disk; the shape alone is not enough.) The disk is
//! shelled relative to a path chosen so that folding the cut back lands
//! exactly on the wanted relative structure, and the peeled triangles are
//! then glued back one at a time.

use thiserror::Error;

use crate::assembly::{cut, fold_scheme, glue_shelling_like, make_folding_map, Partitioned};
use crate::complex::Complex;
use crate::corpus::{classify_surface, SurfaceKind};
use crate::face::Face;
use crate::relative::RelComplex;
use crate::scheme::{
    candidate_minima, scheme_from_shelling, Interval, PartitionScheme, ShellingOrder,
};

use super::disk::shell_disk_relative;

#[derive(Debug, Error)]
pub enum MobiusError {
    #[error("not a Möbius strip: {0}")]
    NotAMobius(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

fn sv(stage: &str, detail: impl std::fmt::Display) -> MobiusError {
    MobiusError::StructureViolation(format!("{stage}: {detail}"))
}

fn classify_mobius(m: &Complex) -> Result<(), MobiusError> {
    match classify_surface(m) {
        Ok(c) if c.kind == SurfaceKind::Mobius => Ok(()),
        Ok(c) => Err(MobiusError::NotAMobius(c.to_string())),
        Err(e) => Err(MobiusError::NotAMobius(e.to_string())),
    }
}

/// Verified scheme for (m, ∂m).
pub fn partition_mobius_rel_boundary(m: &Complex) -> Result<PartitionScheme, MobiusError> {
    classify_mobius(m)?;
    let (peeled, base, tri) = peel_to_base(m)?;
    let mut part = base_scheme(&base, &tri, BaseMode::RelBoundary)?;
    for (before, sigma) in peeled.iter().rev() {
        part = reattach_rel_boundary(before, sigma, part)?;
    }
    let bd = m.boundary().map_err(|e| sv("boundary", e))?;
    if part.complex != RelComplex::new(m.clone(), bd).map_err(|e| sv("target", e))? {
        return Err(sv("result", "reassembly did not return to the input strip"));
    }
    Ok(part.scheme)
}

/// Verified scheme for (m, {∅}).
pub fn partition_mobius_rel_empty(m: &Complex) -> Result<PartitionScheme, MobiusError> {
    classify_mobius(m)?;
    let (peeled, base, tri) = peel_to_base(m)?;
    let mut part = base_scheme(&base, &tri, BaseMode::RelEmpty)?;
    for (before, sigma) in peeled.iter().rev() {
        part = reattach_rel_empty(before, sigma, part)?;
    }
    if part.complex != RelComplex::rel_empty_face(m.clone()) {
        return Err(sv("result", "reassembly did not return to the input strip"));
    }
    Ok(part.scheme)
}

/// Boundary shape of a triangle: (boundary edges, boundary vertices).
fn shape(t: &Face, bd: &Complex) -> (usize, usize) {
    let edges = t.ridges().iter().filter(|e| bd.contains(e)).count();
    let verts = t
        .vertices()
        .iter()
        .filter(|v| bd.contains(&Face::singleton((*v).clone())))
        .count();
    (edges, verts)
}

/// Whether some interior edge of the triangle cuts the strip open into a
/// disk. A triangle of shape (1 edge, 3 vertices) may still fail this: its
/// two interior edges are homologous rel boundary, and when that class is
/// trivial each of them just severs a disk off the strip.
fn opens_to_disk(m: &Complex, tri: &Face, bd: &Complex) -> Result<bool, MobiusError> {
    for e in tri.ridges() {
        if bd.contains(&e) {
            continue;
        }
        let locus = Complex::closure(vec![e]);
        let res = cut(m, &locus).map_err(|err| sv("cut", err))?;
        if matches!(classify_surface(&res.complex), Ok(c) if c.kind == SurfaceKind::Disk) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Remove boundary triangles until one of shape (1 edge, 3 vertices) appears
/// whose cut opens the strip into a disk; removals — always of the two
/// harmless shapes — keep the strip a Möbius strip, which is re-checked at
/// every step. Returns the peel trail, the final strip, and its
/// distinguished triangle.
fn peel_to_base(m: &Complex) -> Result<(Vec<(Complex, Face)>, Complex, Face), MobiusError> {
    let mut peeled = Vec::new();
    let mut cur = m.clone();
    loop {
        let bd = cur.boundary().map_err(|e| sv("boundary", e))?;
        let mut base = None;
        let mut peel = None;
        for t in cur.facets() {
            match shape(t, &bd) {
                (1, 3) => {
                    if opens_to_disk(&cur, t, &bd)? {
                        base = Some(t.clone());
                        break;
                    }
                }
                (1, 2) | (2, 3) => {
                    if peel.is_none() {
                        peel = Some(t.clone());
                    }
                }
                _ => {}
            }
        }
        if let Some(base) = base {
            return Ok((peeled, cur, base));
        }
        let sigma =
            peel.ok_or_else(|| sv("peel", "no boundary triangle can come off the strip"))?;
        let next = Complex::closure(
            cur.facets()
                .iter()
                .filter(|t| **t != sigma)
                .cloned()
                .collect(),
        );
        classify_mobius(&next)
            .map_err(|_| sv("peel", format!("removing {{{sigma}}} broke the strip")))?;
        peeled.push((cur, sigma));
        cur = next;
    }
}

enum BaseMode {
    RelBoundary,
    RelEmpty,
}

/// Cut the strip open through an interior edge of the distinguished triangle
/// (trying both) and shell the resulting disk: relative to the whole rim
/// minus one lift of the cut edge for (m, ∂m), or to a single lift for
/// (m, {∅}). Folding the cut back produces the scheme.
fn base_scheme(m: &Complex, tri: &Face, mode: BaseMode) -> Result<Partitioned, MobiusError> {
    let bd = m.boundary().map_err(|e| sv("boundary", e))?;
    let interior: Vec<Face> = tri
        .ridges()
        .into_iter()
        .filter(|e| !bd.contains(e))
        .collect();
    if interior.len() != 2 {
        return Err(sv(
            "base",
            format!("{{{tri}}} is not of the expected shape"),
        ));
    }

    for e in &interior {
        let locus = Complex::closure(vec![e.clone()]);
        let res = cut(m, &locus).map_err(|err| sv("cut", err))?;
        let d = res.complex;
        match classify_surface(&d) {
            Ok(c) if c.kind == SurfaceKind::Disk => {}
            _ => continue,
        }
        let dbd = d.boundary().map_err(|err| sv("cut boundary", err))?;
        let rim: Vec<Face> = dbd.faces_of_dim(1);
        let lifts: Vec<Face> = rim
            .iter()
            .filter(|f| f.map(&|v| res.fold_back[v].clone()) == *e)
            .cloned()
            .collect();
        if lifts.len() != 2 {
            return Err(sv(
                "cut",
                format!("edge {{{e}}} lifted {} times", lifts.len()),
            ));
        }
        let ups = match mode {
            BaseMode::RelBoundary => {
                Complex::closure(rim.iter().filter(|f| **f != lifts[0]).cloned().collect())
            }
            BaseMode::RelEmpty => Complex::closure(vec![lifts[0].clone()]),
        };
        let order = shell_disk_relative(&d, &ups).map_err(|err| sv("shell", err))?;
        let rc = RelComplex::new(d.clone(), ups).map_err(|err| sv("cut pair", err))?;
        let scheme = scheme_from_shelling(&rc, &order).map_err(|err| sv("scheme", err))?;
        let fmap = make_folding_map(&rc, &res.fold_back).map_err(|err| sv("fold", err))?;
        let expected = match mode {
            BaseMode::RelBoundary => {
                RelComplex::new(m.clone(), bd.clone()).map_err(|err| sv("target", err))?
            }
            BaseMode::RelEmpty => RelComplex::rel_empty_face(m.clone()),
        };
        if fmap.target() != &expected {
            return Err(sv("fold", "cut does not fold back onto the strip"));
        }
        let folded = fold_scheme(&fmap, &scheme).map_err(|err| sv("fold scheme", err))?;
        return Partitioned::new(expected, folded, None).map_err(|err| sv("base", err));
    }
    Err(sv(
        "base",
        "neither interior edge opens the strip into a disk",
    ))
}

/// Glue the peeled triangle σ back onto the partitioned (m∖σ, ∂(m∖σ)): σ
/// contributes a single interval relative to its share of ∂m, and the inner
/// pair is exactly the auxiliary complex the gluing needs.
fn reattach_rel_boundary(
    before: &Complex,
    sigma: &Face,
    inner: Partitioned,
) -> Result<Partitioned, MobiusError> {
    let bd = before.boundary().map_err(|e| sv("boundary", e))?;
    let sig_cx = Complex::closure(vec![sigma.clone()]);
    let rc_a =
        RelComplex::new(sig_cx.clone(), sig_cx.intersection(&bd)).map_err(|e| sv("reattach", e))?;
    let order_a = ShellingOrder::new(vec![sigma.clone()]);
    let scheme_a = scheme_from_shelling(&rc_a, &order_a).map_err(|e| sv("reattach", e))?;
    let a = Partitioned::new(rc_a, scheme_a, Some(order_a)).map_err(|e| sv("reattach", e))?;

    let m_prime = inner.complex.total().clone();
    let gamma_b = Complex::closure(
        bd.faces_of_dim(1)
            .into_iter()
            .filter(|e| !sig_cx.contains(e))
            .collect(),
    );
    let phi_rel = sig_cx.intersection(&m_prime).union(&gamma_b);
    if RelComplex::new(m_prime.clone(), phi_rel).map_err(|e| sv("reattach", e))? != inner.complex {
        return Err(sv(
            "reattach",
            format!("{{{sigma}}} does not hand the rest its own boundary"),
        ));
    }
    let res = glue_shelling_like(
        &a,
        &m_prime,
        &gamma_b,
        Some(&inner.scheme),
        inner.shelling.as_ref(),
    )
    .map_err(|e| sv("glue", e))?;
    Ok(res.into_partitioned())
}

/// Glue the peeled triangle σ back onto the partitioned (m∖σ, {∅}): here the
/// inner pair is the gluing's base and σ contributes the single interval
/// [R, σ] left over once the faces it shares with the rest are discounted.
fn reattach_rel_empty(
    before: &Complex,
    sigma: &Face,
    inner: Partitioned,
) -> Result<Partitioned, MobiusError> {
    let sig_cx = Complex::closure(vec![sigma.clone()]);
    let m_prime = inner.complex.total().clone();
    let phi_b = RelComplex::new(sig_cx.clone(), m_prime.intersection(&sig_cx))
        .map_err(|e| sv("reattach", e))?;
    let minima = candidate_minima(&phi_b, sigma).map_err(|e| sv("reattach", e))?;
    let min = minima
        .first()
        .cloned()
        .ok_or_else(|| sv("reattach", format!("{{{sigma}}} leaves no free face")))?;
    let scheme_b = PartitionScheme::new(vec![Interval::new(min, sigma.clone())]);
    let order_b = ShellingOrder::new(vec![sigma.clone()]);
    let res = glue_shelling_like(
        &inner,
        &sig_cx,
        &Complex::void(),
        Some(&scheme_b),
        Some(&order_b),
    )
    .map_err(|e| sv("glue", e))?;
    if res.combined.total() != before {
        return Err(sv(
            "glue",
            format!("{{{sigma}}} does not rebuild the strip"),
        ));
    }
    Ok(res.into_partitioned())
}
