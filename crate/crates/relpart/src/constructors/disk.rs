//! Shelling a triangulated disk relative to a path on its boundary.
//!
//! The order is built by peeling: each step emits a facet σ whose
//! intersection with the current path Υ is pure 1-dimensional. Removing σ
//! usually leaves a smaller disk (Υ absorbs the remnants of σ), but when σ
//! carries two interior edges meeting at a boundary vertex the disk pinches
//! apart there, and the two sides are shelled separately — each relative to
//! the interior edge it kept plus its share of Υ.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::Complex;
use crate::corpus::{classify_surface, SurfaceKind};
use crate::face::Face;
use crate::relative::RelComplex;
use crate::scheme::{verify_shelling, ShellingOrder, ShellingViolation};

#[derive(Debug, Error)]
pub enum DiskError {
    #[error("not a disk: {0}")]
    NotADisk(String),
    #[error("relative path rejected: {0}")]
    UpsilonInvalid(String),
    #[error("no facet meets the relative path in a pure 1-dimensional set")]
    NoEligibleFacet,
    #[error("assembled order fails verification: {0}")]
    Verification(#[from] ShellingViolation),
}

/// Shell `disk` relative to `upsilon`, a nonempty pure connected
/// 1-dimensional subcomplex of its boundary. The returned order passes
/// `verify_shelling` on `(disk, upsilon)`.
pub fn shell_disk_relative(disk: &Complex, upsilon: &Complex) -> Result<ShellingOrder, DiskError> {
    match classify_surface(disk) {
        Ok(c) if c.kind == SurfaceKind::Disk => {}
        Ok(c) => return Err(DiskError::NotADisk(c.to_string())),
        Err(e) => return Err(DiskError::NotADisk(e.to_string())),
    }

    let mut order: Vec<Face> = Vec::new();
    // Pending (sub-disk, path) pairs; LIFO so a pinch's first side is shelled
    // entirely before its second.
    let mut tasks: Vec<(Complex, Complex)> = vec![(disk.clone(), upsilon.clone())];
    while let Some((d, ups)) = tasks.pop() {
        let bd = d
            .boundary()
            .map_err(|e| DiskError::NotADisk(e.to_string()))?;
        check_path(&ups, &bd)?;

        let sigma = d
            .facets()
            .iter()
            .find(|t| {
                let meet = Complex::closure(vec![(*t).clone()]).intersection(&ups);
                !meet.is_void() && meet.dim() == Some(1) && meet.is_pure()
            })
            .cloned()
            .ok_or(DiskError::NoEligibleFacet)?;
        order.push(sigma.clone());

        let rest: Vec<Face> = d
            .facets()
            .iter()
            .filter(|t| **t != sigma)
            .cloned()
            .collect();
        if rest.is_empty() {
            continue;
        }

        let interior: Vec<Face> = sigma
            .ridges()
            .into_iter()
            .filter(|e| !bd.contains(e))
            .collect();
        let hinge = match interior.as_slice() {
            [e1, e2] => {
                let shared = e1.intersection(e2);
                let v = shared.vertices()[0].clone();
                bd.contains(&Face::singleton(v))
                    .then(|| (e1.clone().min(e2.clone()), e1.clone().max(e2.clone())))
            }
            _ => None,
        };

        match hinge {
            Some((e1, e2)) => {
                let parts = edge_components(&rest);
                if parts.len() != 2 {
                    return Err(DiskError::NotADisk(format!(
                        "removing {{{sigma}}} leaves {} pieces, expected 2",
                        parts.len()
                    )));
                }
                let (d1, d2) = if parts[0].contains(&e1) {
                    (parts[0].clone(), parts[1].clone())
                } else {
                    (parts[1].clone(), parts[0].clone())
                };
                if !d1.contains(&e1) || !d2.contains(&e2) {
                    return Err(DiskError::NotADisk(format!(
                        "pinch at {{{sigma}}} does not separate its interior edges"
                    )));
                }
                let ups1 = Complex::closure(vec![e1]).union(&ups.intersection(&d1));
                let ups2 = Complex::closure(vec![e2]).union(&ups.intersection(&d2));
                tasks.push((d2, ups2));
                tasks.push((d1, ups1));
            }
            None => {
                let next = Complex::closure(rest);
                let ups_next = ups
                    .intersection(&next)
                    .union(&Complex::closure(vec![sigma]).intersection(&next));
                tasks.push((next, ups_next));
            }
        }
    }

    let rc = RelComplex::new(disk.clone(), upsilon.clone())
        .map_err(|e| DiskError::UpsilonInvalid(e.to_string()))?;
    let order = ShellingOrder::new(order);
    verify_shelling(&rc, &order)?;
    Ok(order)
}

fn check_path(ups: &Complex, bd: &Complex) -> Result<(), DiskError> {
    if ups.is_void() || ups.dim() != Some(1) || !ups.is_pure() {
        return Err(DiskError::UpsilonInvalid(
            "path must be a nonempty pure 1-dimensional complex".into(),
        ));
    }
    if !ups.is_connected() {
        return Err(DiskError::UpsilonInvalid("path must be connected".into()));
    }
    if !ups.is_subcomplex_of(bd) {
        return Err(DiskError::UpsilonInvalid(
            "path must lie on the boundary".into(),
        ));
    }
    Ok(())
}

/// Group triangles into components under adjacency through shared edges.
fn edge_components(triangles: &[Face]) -> Vec<Complex> {
    let mut by_edge: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for e in t.ridges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut seen = vec![false; triangles.len()];
    let mut out = Vec::new();
    for start in 0..triangles.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut group = Vec::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            group.push(triangles[i].clone());
            for e in triangles[i].ridges() {
                for &j in &by_edge[&e] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        out.push(Complex::closure(group));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::cut;
    use crate::corpus::mobius5;
    use crate::scheme::{scheme_from_shelling, Interval};

    fn shell(facets: &[&str], path: &[&str]) -> Result<ShellingOrder, DiskError> {
        shell_disk_relative(&Complex::from_strs(facets), &Complex::from_strs(path))
    }

    #[test]
    fn single_triangle() {
        let order = shell(&["abc"], &["ab"]).unwrap();
        assert_eq!(order.order, vec![Face::parse("abc")]);
        let rc =
            RelComplex::new(Complex::from_strs(&["abc"]), Complex::from_strs(&["ab"])).unwrap();
        let scheme = scheme_from_shelling(&rc, &order).unwrap();
        assert_eq!(
            scheme.intervals,
            vec![Interval::new(Face::parse("c"), Face::parse("abc"))]
        );
    }

    #[test]
    fn single_triangle_relative_to_its_whole_boundary() {
        let order = shell(&["abc"], &["ab", "bc", "ac"]).unwrap();
        assert_eq!(order.order.len(), 1);
    }

    #[test]
    fn fans_relative_to_the_outer_path() {
        let rim = ["a", "b", "c", "d", "e", "f", "g", "i", "j"];
        for k in 2..=8 {
            let facets: Vec<String> = (0..k)
                .map(|i| format!("h{}{}", rim[i], rim[i + 1]))
                .collect();
            let path: Vec<String> = (0..k)
                .map(|i| format!("{}{}", rim[i], rim[i + 1]))
                .collect();
            let disk = Complex::from_strs(&facets.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            let ups = Complex::from_strs(&path.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            let order = shell_disk_relative(&disk, &ups).unwrap();
            assert_eq!(order.order.len(), k);
        }
    }

    #[test]
    fn pinch_splits_into_two_sides() {
        // uvw has boundary edge uw and interior edges uv, vw hinged at the
        // boundary vertex v; the two flaps share only v.
        let disk = Complex::from_strs(&["uvw", "uva", "vwb"]);
        let ups = Complex::from_strs(&["uw"]);
        let order = shell_disk_relative(&disk, &ups).unwrap();
        assert_eq!(
            order.order,
            vec![Face::parse("uvw"), Face::parse("auv"), Face::parse("bvw")]
        );
    }

    #[test]
    fn mobius_strip_cut_open_shells_relative_to_most_of_its_rim() {
        let m = mobius5();
        let res = cut(&m, &Complex::from_strs(&["12"])).unwrap();
        let d = res.complex;
        let bd = d.boundary().unwrap();
        let lifts: Vec<Face> = bd
            .faces_of_dim(1)
            .into_iter()
            .filter(|e| e.map(&|v| res.fold_back[v].clone()) == Face::parse("12"))
            .collect();
        assert_eq!(lifts.len(), 2);
        let keep: Vec<Face> = bd
            .faces_of_dim(1)
            .into_iter()
            .filter(|e| *e != lifts[0])
            .collect();
        let ups = Complex::closure(keep);
        let order = shell_disk_relative(&d, &ups).unwrap();
        assert_eq!(order.order.len(), 5);
    }

    #[test]
    fn rejects_non_disks() {
        let err = shell_disk_relative(&mobius5(), &Complex::from_strs(&["13"])).unwrap_err();
        assert!(matches!(err, DiskError::NotADisk(_)));
    }

    #[test]
    fn rejects_bad_paths() {
        // A vertex alone is 0-dimensional.
        let err = shell(&["abc", "acd"], &["a"]).unwrap_err();
        assert!(matches!(err, DiskError::UpsilonInvalid(_)));
        // Two opposite rim edges are disconnected.
        let err = shell(&["abc", "acd"], &["ab", "cd"]).unwrap_err();
        assert!(matches!(err, DiskError::UpsilonInvalid(_)));
        // An interior edge is not on the boundary.
        let err = shell(&["abc", "acd"], &["ac"]).unwrap_err();
        assert!(matches!(err, DiskError::UpsilonInvalid(_)));
    }
}
