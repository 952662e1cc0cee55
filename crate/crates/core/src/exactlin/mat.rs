//! Dense matrices over the rationals.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};
use num_traits::{One, Zero};

use super::sparse::{Echelon, SparseVec};
use super::{int, zero_vec, Scalar};

/// Dense matrix, row major. All arithmetic is exact.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Integer literal grid, mainly for tests and examples.
    pub fn from_i64(grid: &[&[i64]]) -> Self {
        Mat::from_rows(grid.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: length mismatch");
        let mut out = zero_vec(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Scalar>]) -> Mat {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Mat::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            m.set_col(j, col);
        }
        m
    }

    /// Unique reduced row-echelon form; pivots are the leftmost nonzero
    /// column of each row, scanned top to bottom.
    pub fn rref(&self) -> Mat {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(SparseVec::from_dense(self.row(i)));
        }
        let rref_rows = e.into_rref_rows();
        let mut out = Mat::zero(self.rows, self.cols);
        for (i, r) in rref_rows.iter().enumerate() {
            for (j, c) in r.iter() {
                out[(i, *j)] = c.clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(SparseVec::from_dense(self.row(i)));
        }
        e.rank()
    }

    /// Echelonized basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> super::Subspace {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(SparseVec::from_dense(self.row(i)));
        }
        kernel_from_echelon(e, self.cols)
    }

    /// One solution of `M x = b` (free variables set to zero), if consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut e = Echelon::new(self.cols + 1);
        for i in 0..self.rows {
            let mut row = SparseVec::from_dense(self.row(i));
            if !b[i].is_zero() {
                row.add_scaled(&SparseVec::single(self.cols, b[i].clone()), &Scalar::one());
            }
            e.insert(row);
        }
        if e.pivot_cols().contains(&self.cols) {
            return None; // inconsistent
        }
        let rows = e.into_rref_rows();
        let mut x = zero_vec(self.cols);
        for r in rows {
            let pivot = r.leading().expect("nonzero rref row");
            x[pivot] = r.get(self.cols);
        }
        Some(x)
    }

    /// Inverse, if square and nonsingular.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut e = Echelon::new(2 * n);
        for i in 0..n {
            let mut row = SparseVec::from_dense(self.row(i));
            row.add_scaled(&SparseVec::unit(n + i), &Scalar::one());
            e.insert(row);
        }
        let piv = e.pivot_cols();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let rows = e.into_rref_rows();
        let mut inv = Mat::zero(n, n);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter() {
                if *j >= n {
                    inv[(i, j - n)] = c.clone();
                }
            }
        }
        Some(inv)
    }
}

/// Builds the kernel subspace from a forward echelon of the row space.
pub(crate) fn kernel_from_echelon(e: Echelon, ncols: usize) -> super::Subspace {
    let rows = e.clone().into_rref_rows();
    let pivots = e.pivot_cols();
    let free = e.free_cols();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        // x_f = 1, pivot variables balance their row.
        let mut v = SparseVec::unit(f);
        for (k, r) in rows.iter().enumerate() {
            let c = r.get(f);
            if !c.is_zero() {
                v.add_scaled(&SparseVec::unit(pivots[k]), &-c);
            }
        }
        basis.push(v);
    }
    super::Subspace::from_sparse_rows(ncols, basis)
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Mul<&Scalar> for &Mat {
    type Output = Mat;
    fn mul(self, c: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(2);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_zero_is_fixed() {
        let z = Mat::zero(2, 2);
        assert_eq!(z.rref(), z);
    }

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), Mat::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(Mat::identity(3).kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(Mat::zero(3, 3).kernel_basis().dim(), 3);
    }

    #[test]
    fn kernel_of_sum_row() {
        let m = Mat::from_i64(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_dense()[0], alloc::vec![int(1), int(-1)]);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let x = m.solve(&[int(3), int(2)]).unwrap();
        assert_eq!(m.apply(&x), alloc::vec![int(3), int(2)]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
    }
}
