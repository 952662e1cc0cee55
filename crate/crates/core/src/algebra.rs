//! Finite-dimensional associative unital algebras given by structure
//! constants, their opposite and enveloping algebras, and derivations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::anchored_lie::AnchoredLie;
use crate::exactlin::{self, Mat, Scalar, SparseVec, Subspace};
use crate::report::Report;

/// Associative unital algebra over the rationals with a distinguished basis:
/// `e_i e_j = sum_k sc[i][j][k] e_k`, and the unit given as a coordinate
/// vector (it need not be a basis element, e.g. the identity matrix in a
/// matrix-unit basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAlgebra {
    dim: usize,
    sc: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

/// A matrix on `A`-coordinates satisfying the Leibniz rule
/// `d(ab) = d(a)b + a d(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationMat(pub Mat);

impl FinAlgebra {
    /// Builds from raw structure constants; validity is *not* assumed, run
    /// [`check_algebra`] to test it.
    pub fn new(dim: usize, sc: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Self {
        assert_eq!(sc.len(), dim);
        assert!(sc.iter().all(|p| p.len() == dim && p.iter().all(|q| q.len() == dim)));
        assert_eq!(unit.len(), dim);
        FinAlgebra { dim, sc, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[i][j][k]
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = exactlin::zero_vec(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.sc[i][j][k].is_zero() {
                        out[k] += &c * &self.sc[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.sc[i][j].clone()
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            m.set_col(j, &self.mul_vec(x, &exactlin::unit_vec(self.dim, j)));
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            m.set_col(j, &self.mul_vec(&exactlin::unit_vec(self.dim, j), x));
        }
        m
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = self.mul_vec(x, y);
        let yx = self.mul_vec(y, x);
        xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.sc[i][j] != self.sc[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// The center `{x : xa = ax for all a}` as a subspace.
    pub fn center(&self) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..self.dim {
            let l = self.left_mult(&exactlin::unit_vec(self.dim, i));
            let r = self.right_mult(&exactlin::unit_vec(self.dim, i));
            let d = &r - &l;
            for k in 0..self.dim {
                rows.push(d.row(k).to_vec());
            }
        }
        Mat::from_rows(rows).kernel_basis()
    }

    /// The ground field, `dim 1`.
    pub fn rationals() -> Self {
        FinAlgebra::new(
            1,
            alloc::vec![alloc::vec![alloc::vec![Scalar::one()]]],
            alloc::vec![Scalar::one()],
        )
    }

    /// Dual numbers `Q[eps]/(eps^2)`, basis `{1, eps}`.
    pub fn dual_numbers() -> Self {
        let z = Scalar::zero;
        let o = Scalar::one;
        let sc = alloc::vec![
            alloc::vec![alloc::vec![o(), z()], alloc::vec![z(), o()]],
            alloc::vec![alloc::vec![z(), o()], alloc::vec![z(), z()]],
        ];
        FinAlgebra::new(2, sc, alloc::vec![o(), z()])
    }

    /// Full matrix algebra `Mat_n(Q)` in the matrix-unit basis `E_{ij}`,
    /// flattened as `i*n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut sc = alloc::vec![alloc::vec![exactlin::zero_vec(dim); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_{ij} E_{jl} = E_{il}
                    sc[i * n + j][j * n + l][i * n + l] = Scalar::one();
                }
            }
        }
        let mut unit = exactlin::zero_vec(dim);
        for i in 0..n {
            unit[i * n + i] = Scalar::one();
        }
        FinAlgebra::new(dim, sc, unit)
    }

    /// Product algebra `Q^n` (diagonal), basis of orthogonal idempotents.
    pub fn split_commutative(n: usize) -> Self {
        let mut sc = alloc::vec![alloc::vec![exactlin::zero_vec(n); n]; n];
        for i in 0..n {
            sc[i][i][i] = Scalar::one();
        }
        FinAlgebra::new(n, sc, alloc::vec![Scalar::one(); n])
    }
}

/// Diagnostic check of associativity and the unit laws; the report lists
/// every failing basis instance.
pub fn check_algebra(a: &FinAlgebra) -> Report {
    let n = a.dim;
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.mul_vec(&a.mul_basis(i, j), &exactlin::unit_vec(n, k));
                let rhs = a.mul_vec(&exactlin::unit_vec(n, i), &a.mul_basis(j, k));
                if lhs != rhs {
                    report.push("associativity", format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"));
                }
            }
        }
    }
    for i in 0..n {
        let e = exactlin::unit_vec(n, i);
        if a.mul_vec(&a.unit, &e) != e {
            report.push("left-unit", format!("1 * e{i} != e{i}"));
        }
        if a.mul_vec(&e, &a.unit) != e {
            report.push("right-unit", format!("e{i} * 1 != e{i}"));
        }
    }
    report
}

/// Opposite algebra: same space, reversed product.
pub fn opposite(a: &FinAlgebra) -> FinAlgebra {
    let n = a.dim;
    let mut sc = alloc::vec![alloc::vec![exactlin::zero_vec(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            sc[i][j] = a.sc[j][i].clone();
        }
    }
    FinAlgebra::new(n, sc, a.unit.clone())
}

/// Enveloping algebra `A^e = A (x) A^op` on the tensor basis
/// `e_i (x) op(e_j)`, flattened as `i*dim + j`.
pub fn enveloping(a: &FinAlgebra) -> FinAlgebra {
    let n = a.dim;
    let aop = opposite(a);
    let dim = n * n;
    let mut sc = alloc::vec![alloc::vec![exactlin::zero_vec(dim); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // (e_i (x) e_j°)(e_k (x) e_l°) = e_i e_k (x) (e_j° e_l°)
                    for p in 0..n {
                        if a.sc[i][k][p].is_zero() {
                            continue;
                        }
                        for q in 0..n {
                            if aop.sc[j][l][q].is_zero() {
                                continue;
                            }
                            sc[i * n + j][k * n + l][p * n + q] = &a.sc[i][k][p] * &aop.sc[j][l][q];
                        }
                    }
                }
            }
        }
    }
    let mut unit = exactlin::zero_vec(dim);
    for p in 0..n {
        if a.unit[p].is_zero() {
            continue;
        }
        for q in 0..n {
            if !a.unit[q].is_zero() {
                unit[p * n + q] = &a.unit[p] * &a.unit[q];
            }
        }
    }
    FinAlgebra::new(dim, sc, unit)
}

impl DerivationMat {
    pub fn mat(&self) -> &Mat {
        &self.0
    }

    /// First violated Leibniz instance, if any.
    pub fn leibniz_witness(&self, a: &FinAlgebra) -> Option<String> {
        leibniz_witness(a, &self.0)
    }
}

pub(crate) fn leibniz_witness(a: &FinAlgebra, d: &Mat) -> Option<String> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ei = exactlin::unit_vec(n, i);
            let ej = exactlin::unit_vec(n, j);
            let lhs = d.apply(&a.mul_basis(i, j));
            let mut rhs = a.mul_vec(&d.apply(&ei), &ej);
            let second = a.mul_vec(&ei, &d.apply(&ej));
            for (x, y) in rhs.iter_mut().zip(&second) {
                *x += y;
            }
            if lhs != rhs {
                return Some(format!("d(e{i} e{j}) != d(e{i}) e{j} + e{i} d(e{j})"));
            }
        }
    }
    None
}

/// Echelonized basis of the derivation space `Der_K(A)`, solved as the kernel
/// of the linear Leibniz system in the matrix entries `d[r][c]` (flattened
/// `r*dim + c`, column `c` holding the image of `e_c`).
pub fn derivations(a: &FinAlgebra) -> Vec<DerivationMat> {
    let n = a.dim;
    let mut sys = Mat::zero(n * n * n, n * n);
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut terms: Vec<(usize, Scalar)> = Vec::new();
                for k in 0..n {
                    // + c[i][j][k] d[l][k]
                    if !a.sc[i][j][k].is_zero() {
                        terms.push((l * n + k, a.sc[i][j][k].clone()));
                    }
                    // - c[k][j][l] d[k][i]
                    if !a.sc[k][j][l].is_zero() {
                        terms.push((k * n + i, -a.sc[k][j][l].clone()));
                    }
                    // - c[i][k][l] d[k][j]
                    if !a.sc[i][k][l].is_zero() {
                        terms.push((k * n + j, -a.sc[i][k][l].clone()));
                    }
                }
                for (c, v) in SparseVec::from_terms(terms).iter() {
                    sys[(row, *c)] = v.clone();
                }
                row += 1;
            }
        }
    }
    sys.kernel_basis()
        .basis()
        .iter()
        .map(|v| {
            let dense = v.to_dense(n * n);
            let mut m = Mat::zero(n, n);
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] = dense[r * n + c].clone();
                }
            }
            DerivationMat(m)
        })
        .collect()
}

/// The inner derivation `b -> xb - bx`.
pub fn inner_derivation(a: &FinAlgebra, x: &[Scalar]) -> DerivationMat {
    DerivationMat(&a.left_mult(x) - &a.right_mult(x))
}

/// The commutator Lie algebra `L(A)` anchored by the adjoint representation.
pub fn commutator_lie(a: &FinAlgebra) -> AnchoredLie {
    let n = a.dim;
    let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(n); n]; n];
    for (i, row) in brackets.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a.commutator(&exactlin::unit_vec(n, i), &exactlin::unit_vec(n, j));
        }
    }
    let anchor = (0..n).map(|i| inner_derivation(a, &exactlin::unit_vec(n, i)).0).collect();
    AnchoredLie::new(a.clone(), n, brackets, anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};

    #[test]
    fn rationals_are_a_valid_algebra() {
        assert!(check_algebra(&FinAlgebra::rationals()).is_ok());
    }

    #[test]
    fn matrix_algebra_is_valid() {
        assert!(check_algebra(&FinAlgebra::matrix_algebra(2)).is_ok());
    }

    #[test]
    fn dual_numbers_are_valid_and_commutative() {
        let a = FinAlgebra::dual_numbers();
        assert!(check_algebra(&a).is_ok());
        assert!(a.is_commutative());
        assert_eq!(a.mul_basis(1, 1), exactlin::zero_vec(2));
    }

    #[test]
    fn perturbed_constants_report_the_failure() {
        let mut a = FinAlgebra::dual_numbers();
        // 1 * eps = 2 eps breaks the unit law.
        a.sc[0][1][1] = int(2);
        let r = check_algebra(&a);
        assert!(!r.is_ok());
    }

    #[test]
    fn opposite_of_commutative_is_identical() {
        let a = FinAlgebra::dual_numbers();
        assert_eq!(opposite(&a), a);
    }

    #[test]
    fn opposite_swaps_matrix_units() {
        let a = FinAlgebra::matrix_algebra(2);
        let op = opposite(&a);
        // In Mat_2: E12 E21 = E11. In the opposite: E12 *op E21 = E21 E12 = E22.
        let e12 = 1;
        let e21 = 2;
        assert_eq!(a.mul_basis(e12, e21), unit_vec(4, 0));
        assert_eq!(op.mul_basis(e12, e21), unit_vec(4, 3));
        assert_eq!(opposite(&op), a);
    }

    #[test]
    fn enveloping_dims_and_nilpotents() {
        assert_eq!(enveloping(&FinAlgebra::rationals()).dim(), 1);
        assert_eq!(enveloping(&FinAlgebra::matrix_algebra(2)).dim(), 16);
        let ae = enveloping(&FinAlgebra::dual_numbers());
        assert_eq!(ae.dim(), 4);
        assert!(check_algebra(&ae).is_ok());
        // (eps (x) 1°)(eps (x) 1°) = eps^2 (x) 1° = 0
        let eps1 = 2;
        assert_eq!(ae.mul_basis(eps1, eps1), exactlin::zero_vec(4));
    }

    #[test]
    fn enveloping_is_valid_whenever_input_is() {
        for a in [FinAlgebra::dual_numbers(), FinAlgebra::split_commutative(3)] {
            assert!(check_algebra(&enveloping(&a)).is_ok());
        }
    }

    #[test]
    fn derivations_of_the_field_vanish() {
        assert!(derivations(&FinAlgebra::rationals()).is_empty());
    }

    #[test]
    fn derivations_of_dual_numbers() {
        // Hand oracle: d(1) = 0 forces the first column to vanish; Leibniz on
        // (eps,eps) gives 0 = 2 c_0 eps for d(eps) = c_0 + c_1 eps, so
        // Der = span{eps -> eps}.
        let ders = derivations(&FinAlgebra::dual_numbers());
        assert_eq!(ders.len(), 1);
        assert_eq!(ders[0].0, Mat::from_i64(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn derivations_of_mat2_are_the_three_inner_ones() {
        let a = FinAlgebra::matrix_algebra(2);
        let ders = derivations(&a);
        assert_eq!(ders.len(), 3);
        for d in &ders {
            assert!(d.leibniz_witness(&a).is_none());
        }
        let flatten = |m: &Mat| -> Vec<Scalar> { (0..16).map(|k| m[(k / 4, k % 4)].clone()).collect() };
        // Every derivation is inner: the span of ad_x has rank dim - dim center = 3.
        let inner_span = Subspace::from_dense_rows(
            16,
            &(0..4)
                .map(|i| flatten(&inner_derivation(&a, &unit_vec(4, i)).0))
                .collect::<Vec<_>>(),
        );
        assert_eq!(inner_span.dim(), 3);
        for d in &ders {
            assert!(inner_span.contains_dense(&flatten(&d.0)));
        }
    }

    #[test]
    fn derivation_space_is_closed_under_commutator() {
        for a in [FinAlgebra::dual_numbers(), FinAlgebra::matrix_algebra(2)] {
            let n = a.dim();
            let ders = derivations(&a);
            let flatten =
                |m: &Mat| -> Vec<Scalar> { (0..n * n).map(|k| m[(k / n, k % n)].clone()).collect() };
            let span = Subspace::from_dense_rows(
                n * n,
                &ders.iter().map(|d| flatten(&d.0)).collect::<Vec<_>>(),
            );
            for d1 in &ders {
                for d2 in &ders {
                    let comm = &(&d1.0 * &d2.0) - &(&d2.0 * &d1.0);
                    assert!(span.contains_dense(&flatten(&comm)));
                }
            }
        }
    }

    #[test]
    fn inner_derivation_basics() {
        let a = FinAlgebra::matrix_algebra(2);
        assert!(inner_derivation(&a, a.unit()).0.is_zero());
        let c = FinAlgebra::dual_numbers();
        assert!(inner_derivation(&c, &unit_vec(2, 1)).0.is_zero());
        // x = E11: d(E12) = E12, d(E21) = -E21, d(E11) = 0.
        let d = inner_derivation(&a, &unit_vec(4, 0));
        assert_eq!(d.0.apply(&unit_vec(4, 1)), unit_vec(4, 1));
        assert_eq!(d.0.apply(&unit_vec(4, 2)), alloc::vec![int(0), int(0), int(-1), int(0)]);
        assert_eq!(d.0.apply(&unit_vec(4, 0)), exactlin::zero_vec(4));
    }

    #[test]
    fn inner_derivations_vanish_exactly_on_the_center() {
        let a = FinAlgebra::matrix_algebra(2);
        let center = a.center();
        assert_eq!(center.dim(), 1);
        assert!(center.contains_dense(a.unit()));
        for i in 0..4 {
            let x = unit_vec(4, i);
            assert_eq!(inner_derivation(&a, &x).0.is_zero(), center.contains_dense(&x));
        }
    }

    #[test]
    fn commutator_lie_of_commutative_is_abelian() {
        let l = commutator_lie(&FinAlgebra::dual_numbers());
        assert!(l.validate().is_ok());
        assert!(l.brackets_are_zero());
        assert!(l.anchor()[0].is_zero() && l.anchor()[1].is_zero());
    }

    #[test]
    fn commutator_lie_of_mat2_has_central_anchor_kernel() {
        let a = FinAlgebra::matrix_algebra(2);
        let l = commutator_lie(&a);
        assert!(l.validate().is_ok());
        // anchor kernel = center = span{1}
        let cols: Vec<Vec<Scalar>> = (0..4)
            .map(|i| {
                let m = &l.anchor()[i];
                (0..16).map(|k| m[(k / 4, k % 4)].clone()).collect()
            })
            .collect();
        let kernel = Mat::from_cols(&cols).kernel_basis();
        assert_eq!(kernel.dim(), 1);
        assert!(kernel.contains_dense(a.unit()));
    }
}
