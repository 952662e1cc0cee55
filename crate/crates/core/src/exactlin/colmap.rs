//! Column-sparse linear maps.
//!
//! Action matrices on tensor quotients are far too large to hold densely;
//! storing one sparse column per basis vector keeps both memory and
//! application cost proportional to the support.

use alloc::vec::Vec;

use super::sparse::{Echelon, SparseVec};
use super::{Mat, Scalar, Subspace};

/// Linear map `K^cols -> K^rows` stored as sparse columns (column `j` is the
/// image of `e_j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColMap {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl ColMap {
    pub fn new(rows: usize, cols: Vec<SparseVec>) -> Self {
        ColMap { rows, cols }
    }

    pub fn zero(rows: usize, ncols: usize) -> Self {
        ColMap { rows, cols: alloc::vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        ColMap { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_mat(m: &Mat) -> Self {
        ColMap {
            rows: m.rows(),
            cols: (0..m.cols()).map(|j| SparseVec::from_dense(&m.col(j))).collect(),
        }
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zero(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(&self.cols[*j], c);
        }
        out
    }

    /// Composition `self . other`.
    pub fn compose(&self, other: &ColMap) -> ColMap {
        assert_eq!(self.cols.len(), other.rows);
        ColMap {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &ColMap, c: &Scalar) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols.len(), other.cols.len());
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.add_scaled(b, c);
        }
    }

    pub fn sub(&self, other: &ColMap) -> ColMap {
        let mut out = self.clone();
        out.add_scaled(other, &-super::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    /// Rows of the map, for feeding eliminations.
    pub fn transpose_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = alloc::vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[*i].push((j, c.clone()));
            }
        }
        rows.into_iter().map(SparseVec::from_terms).collect()
    }

    /// Rank via sparse elimination on the rows.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols.len());
        for r in self.transpose_rows() {
            e.insert(r);
        }
        e.rank()
    }

    /// Kernel `{v : self(v) = 0}` as a subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.cols.len(), self.transpose_rows())
    }
}

/// Kernel of the linear system whose equations are the given sparse rows.
pub fn kernel_of_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Subspace {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    super::mat::kernel_from_echelon(e, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn colmap_matches_dense() {
        let m = Mat::from_i64(&[&[1, 2], &[0, 3], &[4, 0]]);
        let c = ColMap::from_mat(&m);
        assert_eq!(c.to_mat(), m);
        let v = SparseVec::from_terms([(0, int(2)), (1, int(-1))]);
        assert_eq!(c.apply(&v).to_dense(3), m.apply(&v.to_dense(2)));
        assert_eq!(c.rank(), 2);
    }

    #[test]
    fn compose_matches_matrix_product() {
        let a = Mat::from_i64(&[&[1, 1], &[0, 2]]);
        let b = Mat::from_i64(&[&[3, 0], &[1, 1]]);
        let ab = &a * &b;
        assert_eq!(ColMap::from_mat(&a).compose(&ColMap::from_mat(&b)).to_mat(), ab);
    }

    #[test]
    fn kernel_of_rows_matches_dense_kernel() {
        let m = Mat::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
        let dense = m.kernel_basis();
        let sparse = ColMap::from_mat(&m).kernel();
        assert_eq!(dense, sparse);
    }
}
