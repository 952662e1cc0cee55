//! Subspaces and explicit quotient presentations.

use alloc::vec::Vec;
use num_traits::Zero;

use super::sparse::{Echelon, SparseVec};
use super::{Mat, Scalar};
use crate::error::{Error, Result};

/// Subspace of `K^ambient`, stored as its unique reduced row-echelon basis.
///
/// Equality of subspaces is structural equality of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    /// The whole ambient space.
    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(SparseVec::unit).collect() }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_sparse_rows(ambient: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(ambient);
        for r in rows {
            e.insert(r);
        }
        Subspace { ambient, basis: e.into_rref_rows() }
    }

    pub fn from_dense_rows(ambient: usize, rows: &[Vec<Scalar>]) -> Self {
        Subspace::from_sparse_rows(ambient, rows.iter().map(|r| SparseVec::from_dense(r)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn basis_dense(&self) -> Vec<Vec<Scalar>> {
        self.basis.iter().map(|r| r.to_dense(self.ambient)).collect()
    }

    /// Echelon view used for membership tests and reductions.
    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient);
        for r in &self.basis {
            e.insert(r.clone());
        }
        e
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.contains(&SparseVec::from_dense(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let e = self.echelon();
        other.basis.iter().all(|r| e.contains(r))
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient, other.ambient);
        Subspace::from_sparse_rows(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        // The echelon basis has monic pivots with zeros above and below, so
        // the coefficient of basis row k is just v at that row's pivot.
        let mut coords = Vec::with_capacity(self.basis.len());
        let mut rem = v.clone();
        for row in &self.basis {
            let p = row.leading().expect("echelon rows are nonzero");
            let c = rem.get(p);
            if !c.is_zero() {
                rem.add_scaled(row, &-c.clone());
            }
            coords.push(c);
        }
        if rem.is_zero() {
            Some(coords)
        } else {
            None
        }
    }
}

/// Explicit presentation of a quotient `K^ambient / relations`.
///
/// `proj` maps ambient coordinates onto quotient coordinates, `sect` is the
/// fixed section picking the canonical representative supported on the
/// non-pivot coordinates of the relation echelon. `proj . sect = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient: usize,
    relations: Subspace,
    /// Quotient coordinates of each ambient basis vector (one column per
    /// ambient coordinate, kept sparse; large tensor quotients stay cheap).
    proj_cols: Vec<SparseVec>,
    /// Ambient representative of each quotient basis vector.
    sect_cols: Vec<SparseVec>,
    /// Ambient index of each quotient coordinate (the non-pivot columns).
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient coordinate represented by quotient coordinate `q`.
    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    /// Class of an ambient vector, in quotient coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.add_scaled(&self.proj_cols[*i], c);
        }
        out
    }

    pub fn project_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project(&SparseVec::from_dense(v)).to_dense(self.dim())
    }

    /// Canonical ambient representative of a quotient vector.
    pub fn section(&self, q: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in q.iter() {
            out.add_scaled(&self.sect_cols[*i], c);
        }
        out
    }

    pub fn section_dense(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section(&SparseVec::from_dense(q)).to_dense(self.ambient)
    }

    /// Projection as a dense matrix (quotient x ambient). Intended for small
    /// quotients; the sparse accessors are the primary interface.
    pub fn proj_mat(&self) -> Mat {
        let mut m = Mat::zero(self.dim(), self.ambient);
        for (j, col) in self.proj_cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }

    /// Section as a dense matrix (ambient x quotient).
    pub fn sect_mat(&self) -> Mat {
        let mut m = Mat::zero(self.ambient, self.dim());
        for (j, col) in self.sect_cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }
}

/// Quotient of `K^ambient` by the span of the given relation vectors.
///
/// The quotient basis is the set of non-pivot ambient coordinates of the
/// relation echelon, in increasing order; with the leftmost-pivot rule this
/// makes the presentation canonical.
pub fn quotient_by(
    ambient: usize,
    relations: impl IntoIterator<Item = SparseVec>,
) -> QuotientSpace {
    let mut e = Echelon::new(ambient);
    for r in relations {
        e.insert(r);
    }
    quotient_from_echelon(ambient, e)
}

pub(crate) fn quotient_from_echelon(ambient: usize, e: Echelon) -> QuotientSpace {
    let pivots = e.pivot_cols();
    let free = e.free_cols();
    let rows = e.into_rref_rows();

    // Quotient index of each free ambient coordinate.
    let mut qidx = alloc::collections::BTreeMap::new();
    for (q, &f) in free.iter().enumerate() {
        qidx.insert(f, q);
    }

    let mut proj_cols = alloc::vec![SparseVec::new(); ambient];
    for (q, &f) in free.iter().enumerate() {
        proj_cols[f] = SparseVec::unit(q);
    }
    // A pivot coordinate e_p with rref row e_p + sum_f c_f e_f is congruent
    // to -sum_f c_f e_f modulo the relations.
    for (k, row) in rows.iter().enumerate() {
        let p = pivots[k];
        let mut col = SparseVec::new();
        for (j, c) in row.iter() {
            if *j != p {
                col.add_scaled(&SparseVec::unit(qidx[j]), &-c.clone());
            }
        }
        proj_cols[p] = col;
    }

    let sect_cols = free.iter().map(|&f| SparseVec::unit(f)).collect();

    QuotientSpace {
        ambient,
        relations: Subspace { ambient, basis: rows },
        proj_cols,
        sect_cols,
        free_cols: free,
    }
}

/// Intersection of two subspaces of the same ambient space.
///
/// Computed from the kernel of the stacked system `[U^T | -V^T]`: a vector
/// lies in both row spaces iff it is a `U`-combination equal to a
/// `V`-combination.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            context: "intersect",
            expected: a.ambient,
            found: b.ambient,
        });
    }
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Subspace::zero(a.ambient));
    }
    // Columns: coefficients on a's basis, then on b's basis.
    // Rows: one per ambient coordinate.
    let mut sys = Mat::zero(a.ambient, a.dim() + b.dim());
    for (k, r) in a.basis.iter().enumerate() {
        for (i, c) in r.iter() {
            sys[(*i, k)] = c.clone();
        }
    }
    for (k, r) in b.basis.iter().enumerate() {
        for (i, c) in r.iter() {
            sys[(*i, a.dim() + k)] = -c.clone();
        }
    }
    let null = sys.kernel_basis();
    let vectors = null.basis().iter().map(|n| {
        let mut v = SparseVec::new();
        for (j, c) in n.iter() {
            if *j < a.dim() {
                v.add_scaled(&a.basis[*j], c);
            }
        }
        v
    });
    let vectors: Vec<SparseVec> = vectors.collect();
    Ok(Subspace::from_sparse_rows(a.ambient, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};

    #[test]
    fn quotient_without_relations_is_identity() {
        let q = quotient_by(3, core::iter::empty());
        assert_eq!(q.dim(), 3);
        for i in 0..3 {
            assert_eq!(q.project(&SparseVec::unit(i)), SparseVec::unit(i));
            assert_eq!(q.section(&SparseVec::unit(i)), SparseVec::unit(i));
        }
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let q = quotient_by(2, (0..2).map(SparseVec::unit));
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn quotient_identifies_e1_and_e2() {
        let rel = SparseVec::from_terms([(0, int(1)), (1, int(-1))]);
        let q = quotient_by(3, [rel.clone()]);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&SparseVec::unit(0)), q.project(&SparseVec::unit(1)));
        assert!(q.project(&rel).is_zero());
        // proj . sect = id
        for i in 0..2 {
            assert_eq!(q.project(&q.section(&SparseVec::unit(i))), SparseVec::unit(i));
        }
    }

    #[test]
    fn intersect_equal_spaces() {
        let a = Subspace::from_dense_rows(3, &[unit_vec(3, 0), unit_vec(3, 2)]);
        assert_eq!(intersect(&a, &a).unwrap(), a);
    }

    #[test]
    fn intersect_complementary_lines() {
        let a = Subspace::from_dense_rows(2, &[unit_vec(2, 0)]);
        let b = Subspace::from_dense_rows(2, &[unit_vec(2, 1)]);
        assert_eq!(intersect(&a, &b).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_planes_sharing_a_line() {
        // span{e1,e2} and span{e2,e3} share span{e2}.
        let a = Subspace::from_dense_rows(3, &[unit_vec(3, 0), unit_vec(3, 1)]);
        let b = Subspace::from_dense_rows(3, &[unit_vec(3, 1), unit_vec(3, 2)]);
        let c = intersect(&a, &b).unwrap();
        assert_eq!(c, Subspace::from_dense_rows(3, &[unit_vec(3, 1)]));
    }

    #[test]
    fn intersect_dimension_mismatch_errors() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(intersect(&a, &b).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::from_dense_rows(3, &[
            alloc::vec![int(1), int(1), int(0)],
            alloc::vec![int(0), int(0), int(1)],
        ]);
        let v = SparseVec::from_terms([(0, int(2)), (1, int(2)), (2, int(-1))]);
        let coords = s.coordinates(&v).unwrap();
        assert_eq!(coords, alloc::vec![int(2), int(-1)]);
        assert!(s.coordinates(&SparseVec::unit(0)).is_none());
    }
}
