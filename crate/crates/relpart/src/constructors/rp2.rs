//! Partitioning a triangulation of the projective plane. Removing any single
//! triangle leaves a Möbius strip sharing that triangle's entire boundary,
//! so the plane decomposes into a triangle plus a strip; gluing the
//! triangle's interval onto a scheme for the strip (relative to its boundary
//! or to {∅}, depending on the mode) covers the whole plane.

use thiserror::Error;

use crate::assembly::{glue_shelling_like, Partitioned};
use crate::complex::Complex;
use crate::corpus::{classify_surface, SurfaceKind};
use crate::face::Face;
use crate::relative::RelComplex;
use crate::scheme::{scheme_from_shelling, Interval, PartitionScheme, ShellingOrder};

use super::mobius::{partition_mobius_rel_boundary, partition_mobius_rel_empty};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rp2Mode {
    Plain,
    RelEmpty,
}

#[derive(Debug, Error)]
pub enum Rp2Error {
    #[error("not a projective plane: {0}")]
    NotRP2(String),
    #[error("{{{0}}} is not a facet")]
    NotAFacet(Face),
    #[error("classification failed: {0}")]
    ClassificationFailure(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

fn sv(stage: &str, detail: impl std::fmt::Display) -> Rp2Error {
    Rp2Error::StructureViolation(format!("{stage}: {detail}"))
}

fn classify_rp2(p: &Complex) -> Result<(), Rp2Error> {
    match classify_surface(p) {
        Ok(c) if c.kind == SurfaceKind::ProjectivePlane => Ok(()),
        Ok(c) => Err(Rp2Error::NotRP2(c.to_string())),
        Err(e) => Err(Rp2Error::NotRP2(e.to_string())),
    }
}

/// Remove the facet σ from a projective plane; the remainder is a Möbius
/// strip whose boundary is exactly ∂σ — both facts are checked.
pub fn decompose_rp2(p: &Complex, sigma: &Face) -> Result<Complex, Rp2Error> {
    classify_rp2(p)?;
    if !p.facets().contains(sigma) {
        return Err(Rp2Error::NotAFacet(sigma.clone()));
    }
    let m = Complex::closure(p.facets().iter().filter(|t| *t != sigma).cloned().collect());
    match classify_surface(&m) {
        Ok(c) if c.kind == SurfaceKind::Mobius => {}
        Ok(c) => {
            return Err(Rp2Error::ClassificationFailure(format!(
                "removing {{{sigma}}} left {c}"
            )))
        }
        Err(e) => {
            return Err(Rp2Error::ClassificationFailure(format!(
                "removing {{{sigma}}} left a non-surface: {e}"
            )))
        }
    }
    let sigma_bd = Complex::closure(vec![sigma.clone()])
        .boundary()
        .map_err(|e| sv("triangle boundary", e))?;
    let m_bd = m.boundary().map_err(|e| sv("strip boundary", e))?;
    if m_bd != sigma_bd {
        return Err(Rp2Error::ClassificationFailure(format!(
            "the strip left by {{{sigma}}} does not share its boundary"
        )));
    }
    Ok(m)
}

/// Verified scheme for (p, ∅) or (p, {∅}).
pub fn partition_rp2(p: &Complex, mode: Rp2Mode) -> Result<PartitionScheme, Rp2Error> {
    classify_rp2(p)?;
    let sigma = p
        .facets()
        .iter()
        .next()
        .cloned()
        .expect("a projective plane has facets");
    let m = decompose_rp2(p, &sigma)?;
    let sig_cx = Complex::closure(vec![sigma.clone()]);

    match mode {
        Rp2Mode::Plain => {
            let rc_a = RelComplex::plain(sig_cx.clone());
            let order_a = ShellingOrder::new(vec![sigma.clone()]);
            let scheme_a = scheme_from_shelling(&rc_a, &order_a).map_err(|e| sv("triangle", e))?;
            let a =
                Partitioned::new(rc_a, scheme_a, Some(order_a)).map_err(|e| sv("triangle", e))?;
            let b_scheme = partition_mobius_rel_boundary(&m).map_err(|e| sv("strip", e))?;
            let res = glue_shelling_like(&a, &m, &Complex::void(), Some(&b_scheme), None)
                .map_err(|e| sv("glue", e))?;
            if res.combined != RelComplex::plain(p.clone()) {
                return Err(sv("glue", "pieces do not reassemble the plane"));
            }
            Ok(res.scheme)
        }
        Rp2Mode::RelEmpty => {
            let m_scheme = partition_mobius_rel_empty(&m).map_err(|e| sv("strip", e))?;
            let a = Partitioned::new(RelComplex::rel_empty_face(m), m_scheme, None)
                .map_err(|e| sv("strip", e))?;
            let scheme_b = PartitionScheme::new(vec![Interval::new(sigma.clone(), sigma.clone())]);
            let order_b = ShellingOrder::new(vec![sigma]);
            let res = glue_shelling_like(
                &a,
                &sig_cx,
                &Complex::void(),
                Some(&scheme_b),
                Some(&order_b),
            )
            .map_err(|e| sv("glue", e))?;
            if res.combined != RelComplex::rel_empty_face(p.clone()) {
                return Err(sv("glue", "pieces do not reassemble the plane"));
            }
            Ok(res.scheme)
        }
    }
}
