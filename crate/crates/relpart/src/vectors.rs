//! f- and h-vectors of (relative) complexes. The two are linked by
//!
//! ```text
//! Σ_{i=0}^{d} f_{i−1} (t−1)^{d−i} = Σ_{i=0}^{d} h_i t^{d−i}
//! ```
//!
//! which inverts to  h_j = Σ_{i≤j} (−1)^{j−i} C(d−i, j−i) f_{i−1}.
//! The parameter d defaults to dim(Δ)+1 of the total complex.

use crate::relative::RelComplex;
use std::fmt;

/// (f_{−1}, f_0, …, f_{d−1}) stored with a +1 index shift.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector(pub Vec<i64>);

/// (h_0, …, h_d).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector(pub Vec<i64>);

impl FVector {
    /// f_i for i in −1..=d−1.
    pub fn entry(&self, i: i64) -> i64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }
}

impl HVector {
    pub fn entry(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn has_negative_entry(&self) -> Option<(usize, i64)> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, v)| **v < 0)
            .map(|(j, v)| (j, *v))
    }

    /// Entrywise sum; vectors are zero-padded to the longer length.
    pub fn add(&self, other: &HVector) -> HVector {
        let n = self.0.len().max(other.0.len());
        HVector((0..n).map(|j| self.entry(j) + other.entry(j)).collect())
    }
}

fn display_vec(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_vec(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_vec(f, &self.0)
    }
}

/// Default dimension parameter: dim(Δ)+1, or 0 for the void complex.
pub fn default_d(rc: &RelComplex) -> usize {
    rc.total().dim().map(|d| (d + 1) as usize).unwrap_or(0)
}

pub fn f_vector(rc: &RelComplex) -> FVector {
    f_vector_with_d(rc, default_d(rc))
}

pub fn f_vector_with_d(rc: &RelComplex, d: usize) -> FVector {
    let mut entries = vec![0i64; d + 1];
    for face in rc.faces() {
        let i = (face.dim() + 1) as usize;
        assert!(i <= d, "face of dimension {} exceeds d = {d}", face.dim());
        entries[i] += 1;
    }
    FVector(entries)
}

pub fn h_vector(rc: &RelComplex) -> HVector {
    h_from_f(&f_vector(rc))
}

pub fn h_vector_with_d(rc: &RelComplex, d: usize) -> HVector {
    h_from_f(&f_vector_with_d(rc, d))
}

/// The complex with no faces gets the all-zero h-vector (the inversion
/// formula yields it; no special case needed).
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let mut h = vec![0i64; d + 1];
    for (j, hj) in h.iter_mut().enumerate() {
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            *hj += sign * binomial(d - i, j - i) * f.entry(i as i64 - 1);
        }
    }
    HVector(h)
}

/// Reduced Euler characteristic of the face set Δ∖Γ: Σ (−1)^dim, the empty
/// face contributing −1. Equals χ̃(Δ) − χ̃(Γ).
pub fn rel_euler_char(rc: &RelComplex) -> i64 {
    rc.faces()
        .iter()
        .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
        .sum()
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complex;

    fn plain(strs: &[&str]) -> RelComplex {
        RelComplex::plain(Complex::from_strs(strs))
    }

    /// Both sides of the defining polynomial relation at a given t.
    fn poly_sides(f: &FVector, h: &HVector, t: i64) -> (i64, i64) {
        let d = f.d() as i64;
        let lhs: i64 = (0..=d)
            .map(|i| f.entry(i - 1) * (t - 1).pow((d - i) as u32))
            .sum();
        let rhs: i64 = (0..=d)
            .map(|i| h.entry(i as usize) * t.pow((d - i) as u32))
            .sum();
        (lhs, rhs)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn bowtie_h_vector() {
        let rc = plain(&["125", "345"]);
        assert_eq!(f_vector(&rc), FVector(vec![1, 5, 6, 2]));
        assert_eq!(h_vector(&rc), HVector(vec![1, 2, -1, 0]));
    }

    #[test]
    fn fig1_graph_h_vector() {
        let rc = plain(&["12", "34", "45", "35"]);
        assert_eq!(f_vector(&rc), FVector(vec![1, 5, 4]));
        assert_eq!(h_vector(&rc), HVector(vec![1, 3, 0]));
    }

    #[test]
    fn mobius5_relative_vectors() {
        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        let bd = m.boundary().unwrap();
        let rel_bd = RelComplex::new(m.clone(), bd).unwrap();
        assert_eq!(f_vector(&rel_bd), FVector(vec![0, 0, 5, 5]));
        assert_eq!(h_vector(&rel_bd), HVector(vec![0, 0, 5, 0]));

        let rel_empty = RelComplex::rel_empty_face(m);
        assert_eq!(f_vector(&rel_empty), FVector(vec![0, 5, 10, 5]));
        assert_eq!(h_vector(&rel_empty), HVector(vec![0, 5, 0, 0]));
    }

    #[test]
    fn faceless_pair_has_zero_h() {
        let tri = Complex::from_strs(&["12"]);
        let rc = RelComplex::new(tri.clone(), tri).unwrap();
        assert!(rc.faces().is_empty());
        assert_eq!(h_vector(&rc), HVector(vec![0, 0, 0]));
        assert_eq!(rel_euler_char(&rc), 0);
    }

    #[test]
    fn euler_decomposition() {
        let m = Complex::from_strs(&["123", "234", "345", "145", "125"]);
        let bd = m.boundary().unwrap();
        let rc = RelComplex::new(m.clone(), bd.clone()).unwrap();
        assert_eq!(
            rel_euler_char(&rc),
            m.euler_char_reduced() - bd.euler_char_reduced()
        );
        // h_d = (−1)^{d−1} χ̃
        let h = h_vector(&rc);
        let d = h.d();
        let sign = if (d as i64 - 1) % 2 == 0 { 1 } else { -1 };
        assert_eq!(h.entry(d), sign * rel_euler_char(&rc));
    }

    #[test]
    fn polynomial_identity_spot_checks() {
        for rc in [
            plain(&["125", "345"]),
            plain(&["12", "34", "45", "35"]),
            RelComplex::rel_empty_face(Complex::from_strs(&["123", "234"])),
        ] {
            let f = f_vector(&rc);
            let h = h_from_f(&f);
            for t in 0..=2 {
                let (lhs, rhs) = poly_sides(&f, &h, t);
                assert_eq!(lhs, rhs, "t = {t} on {rc}");
            }
            // f_{d−1} = Σ h_i
            assert_eq!(f.entry(f.d() as i64 - 1), h.0.iter().sum::<i64>());
        }
    }
}
