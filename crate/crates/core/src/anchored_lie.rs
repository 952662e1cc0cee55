//! Lie algebras acting on an algebra by derivations, their morphisms and
//! semi-direct products.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::algebra::{self, FinAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{self, Mat, Scalar, SparseVec, Subspace};
use crate::report::Report;

/// A finite-dimensional Lie algebra `L` over the rationals together with an
/// anchor: a Lie algebra morphism `L -> Der_K(A)` given by one derivation
/// matrix per basis element.
///
/// `[X_i, X_j] = sum_k brackets[i][j][k] X_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredLie {
    base: FinAlgebra,
    ldim: usize,
    brackets: Vec<Vec<Vec<Scalar>>>,
    anchor: Vec<Mat>,
}

impl AnchoredLie {
    pub fn new(
        base: FinAlgebra,
        ldim: usize,
        brackets: Vec<Vec<Vec<Scalar>>>,
        anchor: Vec<Mat>,
    ) -> Self {
        assert_eq!(brackets.len(), ldim);
        assert!(brackets.iter().all(|r| r.len() == ldim && r.iter().all(|v| v.len() == ldim)));
        assert_eq!(anchor.len(), ldim);
        for m in &anchor {
            assert_eq!((m.rows(), m.cols()), (base.dim(), base.dim()));
        }
        AnchoredLie { base, ldim, brackets, anchor }
    }

    /// The zero Lie algebra over `base`.
    pub fn zero_lie(base: FinAlgebra) -> Self {
        AnchoredLie::new(base, 0, Vec::new(), Vec::new())
    }

    /// Abelian Lie algebra with prescribed (pairwise commuting) anchors.
    pub fn abelian(base: FinAlgebra, anchor: Vec<Mat>) -> Self {
        let ldim = anchor.len();
        let brackets = alloc::vec![alloc::vec![exactlin::zero_vec(ldim); ldim]; ldim];
        AnchoredLie::new(base, ldim, brackets, anchor)
    }

    /// One-dimensional Lie algebra acting by a single derivation.
    pub fn single_derivation(base: FinAlgebra, d: Mat) -> Self {
        AnchoredLie::abelian(base, alloc::vec![d])
    }

    /// `sl_2` with basis `(e, f, h)` and the zero anchor.
    pub fn sl2_zero_anchor(base: FinAlgebra) -> Self {
        let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(3); 3]; 3];
        let mut set = |i: usize, j: usize, v: Vec<Scalar>| {
            brackets[j][i] = v.iter().map(|c| -c.clone()).collect();
            brackets[i][j] = v;
        };
        // [e,f] = h, [h,e] = 2e, [h,f] = -2f
        set(0, 1, exactlin::unit_vec(3, 2));
        let mut two_e = exactlin::zero_vec(3);
        two_e[0] = exactlin::int(2);
        set(2, 0, two_e);
        let mut minus_two_f = exactlin::zero_vec(3);
        minus_two_f[1] = exactlin::int(-2);
        set(2, 1, minus_two_f);
        let zero = Mat::zero(base.dim(), base.dim());
        AnchoredLie::new(base, 3, brackets, alloc::vec![zero.clone(), zero.clone(), zero])
    }

    pub fn base(&self) -> &FinAlgebra {
        &self.base
    }

    pub fn ldim(&self) -> usize {
        self.ldim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.brackets[i][j]
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = exactlin::zero_vec(self.ldim);
        for i in 0..self.ldim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.ldim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.ldim {
                    if !self.brackets[i][j][k].is_zero() {
                        out[k] += &c * &self.brackets[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn anchor(&self) -> &[Mat] {
        &self.anchor
    }

    /// Anchor of an arbitrary element, by linearity.
    pub fn anchor_of(&self, x: &[Scalar]) -> Mat {
        let n = self.base.dim();
        let mut m = Mat::zero(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &(&self.anchor[i] * c);
            }
        }
        m
    }

    pub fn brackets_are_zero(&self) -> bool {
        self.brackets.iter().all(|r| r.iter().all(|v| v.iter().all(Zero::is_zero)))
    }

    /// Checks antisymmetry, the Jacobi identity, that the anchor is a Lie
    /// algebra morphism and that each anchor matrix is a derivation of the
    /// base. Lists every failed instance.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let m = self.ldim;
        for i in 0..m {
            for j in 0..m {
                let neg: Vec<Scalar> = self.brackets[j][i].iter().map(|c| -c.clone()).collect();
                if self.brackets[i][j] != neg {
                    report.push("antisymmetry", format!("[X{i},X{j}] != -[X{j},X{i}]"));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let mut acc = self.bracket_vec(&self.brackets[i][j], &exactlin::unit_vec(m, k));
                    let t2 = self.bracket_vec(&self.brackets[j][k], &exactlin::unit_vec(m, i));
                    let t3 = self.bracket_vec(&self.brackets[k][i], &exactlin::unit_vec(m, j));
                    for ((a, b), c) in acc.iter_mut().zip(&t2).zip(&t3) {
                        *a += b;
                        *a += c;
                    }
                    if acc.iter().any(|c| !c.is_zero()) {
                        report.push("jacobi", format!("cyclic sum on (X{i},X{j},X{k}) is nonzero"));
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let lhs = self.anchor_of(&self.brackets[i][j]);
                let rhs =
                    &(&self.anchor[i] * &self.anchor[j]) - &(&self.anchor[j] * &self.anchor[i]);
                if lhs != rhs {
                    report.push(
                        "anchor-morphism",
                        format!("omega([X{i},X{j}]) != [omega(X{i}), omega(X{j})]"),
                    );
                }
            }
        }
        for (i, d) in self.anchor.iter().enumerate() {
            if let Some(w) = algebra::leibniz_witness(&self.base, d) {
                report.push("anchor-leibniz", format!("omega(X{i}): {w}"));
            }
        }
        report
    }
}

/// Is `f` (a `dst.ldim x src.ldim` matrix) a morphism of anchored Lie
/// algebras, i.e. bracket-preserving with `omega_dst . f = omega_src`?
pub fn is_morphism(f: &Mat, src: &AnchoredLie, dst: &AnchoredLie) -> Result<bool> {
    if src.base != dst.base {
        return Err(Error::Precondition {
            context: "is_morphism",
            witness: String::from("source and target live over different base algebras"),
        });
    }
    assert_eq!((f.rows(), f.cols()), (dst.ldim, src.ldim));
    for i in 0..src.ldim {
        for j in 0..src.ldim {
            let lhs = f.apply(src.bracket_basis(i, j));
            let rhs = dst.bracket_vec(&f.col(i), &f.col(j));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    for i in 0..src.ldim {
        if dst.anchor_of(&f.col(i)) != src.anchor[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Semi-direct product `L'' x_delta L'`: the new basis lists `L''` first,
/// then `L'`; bracket `[(X'',X'), (Y'',Y')] = ([X'',Y''], delta(X'')(Y') -
/// delta(Y'')(X') + [X',Y'])`; anchor `(X'',X') -> omega''(X'') + omega'(X')`.
///
/// `delta` holds one `ldim' x ldim'` matrix per basis element of `L''`. All
/// preconditions (delta maps into derivations of `L'`, is a Lie morphism,
/// and is compatible with the anchors) are verified, never assumed.
pub fn semidirect(l2: &AnchoredLie, l1: &AnchoredLie, delta: &[Mat]) -> Result<AnchoredLie> {
    if l2.base != l1.base {
        return Err(Error::Precondition {
            context: "semidirect",
            witness: String::from("factors live over different base algebras"),
        });
    }
    let (m2, m1) = (l2.ldim, l1.ldim);
    assert_eq!(delta.len(), m2);
    for d in delta {
        assert_eq!((d.rows(), d.cols()), (m1, m1));
    }

    // delta(X'') must be a derivation of the bracket of L'.
    for (i, d) in delta.iter().enumerate() {
        for p in 0..m1 {
            for q in 0..m1 {
                let lhs = d.apply(l1.bracket_basis(p, q));
                let mut rhs = l1.bracket_vec(&d.col(p), &exactlin::unit_vec(m1, q));
                let t = l1.bracket_vec(&exactlin::unit_vec(m1, p), &d.col(q));
                for (a, b) in rhs.iter_mut().zip(&t) {
                    *a += b;
                }
                if lhs != rhs {
                    return Err(Error::Precondition {
                        context: "semidirect",
                        witness: format!("delta(X''{i}) is not a derivation at (X'{p}, X'{q})"),
                    });
                }
            }
        }
    }
    // delta must be a Lie algebra morphism L'' -> Der(L').
    for i in 0..m2 {
        for j in 0..m2 {
            let mut lhs = Mat::zero(m1, m1);
            for (k, c) in l2.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    lhs = &lhs + &(&delta[k] * c);
                }
            }
            let rhs = &(&delta[i] * &delta[j]) - &(&delta[j] * &delta[i]);
            if lhs != rhs {
                return Err(Error::Precondition {
                    context: "semidirect",
                    witness: format!("delta is not a Lie morphism at (X''{i}, X''{j})"),
                });
            }
        }
    }
    // Compatibility with the anchors.
    for i in 0..m2 {
        for j in 0..m1 {
            let lhs = &(&l2.anchor[i] * &l1.anchor[j]) - &(&l1.anchor[j] * &l2.anchor[i]);
            let rhs = l1.anchor_of(&delta[i].col(j));
            if lhs != rhs {
                return Err(Error::Precondition {
                    context: "semidirect",
                    witness: format!(
                        "[omega''(X''{i}), omega'(X'{j})] != omega'(delta(X''{i})(X'{j}))"
                    ),
                });
            }
        }
    }

    let ldim = m2 + m1;
    let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(ldim); ldim]; ldim];
    for i in 0..ldim {
        for j in 0..ldim {
            let (x2, x1) = split_basis(i, m2, m1);
            let (y2, y1) = split_basis(j, m2, m1);
            let second = l2.bracket_vec(&x2, &y2);
            let mut first = l1.bracket_vec(&x1, &y1);
            for k in 0..m2 {
                if !x2[k].is_zero() {
                    let d = delta[k].apply(&y1);
                    for (a, b) in first.iter_mut().zip(&d) {
                        *a += &x2[k] * b;
                    }
                }
                if !y2[k].is_zero() {
                    let d = delta[k].apply(&x1);
                    for (a, b) in first.iter_mut().zip(&d) {
                        *a -= &y2[k] * b;
                    }
                }
            }
            let mut v = exactlin::zero_vec(ldim);
            v[..m2].clone_from_slice(&second);
            v[m2..].clone_from_slice(&first);
            brackets[i][j] = v;
        }
    }
    let mut anchor = Vec::with_capacity(ldim);
    anchor.extend(l2.anchor.iter().cloned());
    anchor.extend(l1.anchor.iter().cloned());
    Ok(AnchoredLie::new(l2.base.clone(), ldim, brackets, anchor))
}

fn split_basis(i: usize, m2: usize, m1: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut x2 = exactlin::zero_vec(m2);
    let mut x1 = exactlin::zero_vec(m1);
    if i < m2 {
        x2[i] = exactlin::one();
    } else {
        x1[i - m2] = exactlin::one();
    }
    (x2, x1)
}

/// A successful semi-direct decomposition of `L` along two spans.
#[derive(Debug, Clone)]
pub struct SemidirectDecomposition {
    /// The recovered action `X'' -> [X'', -]` restricted to the ideal, one
    /// matrix (in ideal coordinates) per basis vector of the subalgebra.
    pub delta: Vec<Mat>,
    /// Columns are the subalgebra basis followed by the ideal basis, as
    /// vectors of `L`: the isomorphism `L'' x L' -> L, (X'',X') -> X'' + X'`.
    pub witness: Mat,
    /// The subalgebra with its restricted structure.
    pub sub: AnchoredLie,
    /// The ideal with its restricted structure.
    pub ideal: AnchoredLie,
}

/// Which decomposition condition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposeFailure {
    NotAnIdeal { witness: String },
    NotASubalgebra { witness: String },
    SumNotEverything { sum_dim: usize, ldim: usize },
    IntersectionNonzero { dim: usize },
}

impl core::fmt::Display for DecomposeFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DecomposeFailure::NotAnIdeal { witness } => write!(f, "first span is not an ideal: {witness}"),
            DecomposeFailure::NotASubalgebra { witness } => {
                write!(f, "second span is not a subalgebra: {witness}")
            }
            DecomposeFailure::SumNotEverything { sum_dim, ldim } => {
                write!(f, "spans sum to dimension {sum_dim} < {ldim}")
            }
            DecomposeFailure::IntersectionNonzero { dim } => {
                write!(f, "spans intersect in dimension {dim}")
            }
        }
    }
}

/// Tries to present `l` as the semi-direct product of the subalgebra spanned
/// by `l2_span` acting on the ideal spanned by `l1_span`.
pub fn decompose_semidirect(
    l: &AnchoredLie,
    l1_span: &Subspace,
    l2_span: &Subspace,
) -> core::result::Result<SemidirectDecomposition, DecomposeFailure> {
    assert_eq!(l1_span.ambient_dim(), l.ldim);
    assert_eq!(l2_span.ambient_dim(), l.ldim);

    let l1_basis = l1_span.basis_dense();
    let l2_basis = l2_span.basis_dense();

    // (i) the first span is an ideal: [L, L'] lies in L'.
    for i in 0..l.ldim {
        for (j, w) in l1_basis.iter().enumerate() {
            let b = l.bracket_vec(&exactlin::unit_vec(l.ldim, i), w);
            if !l1_span.contains_dense(&b) {
                return Err(DecomposeFailure::NotAnIdeal {
                    witness: format!("[X{i}, l1 basis {j}] escapes the span"),
                });
            }
        }
    }
    // The second span must be a subalgebra.
    for (i, v) in l2_basis.iter().enumerate() {
        for (j, w) in l2_basis.iter().enumerate() {
            let b = l.bracket_vec(v, w);
            if !l2_span.contains_dense(&b) {
                return Err(DecomposeFailure::NotASubalgebra {
                    witness: format!("[l2 basis {i}, l2 basis {j}] escapes the span"),
                });
            }
        }
    }
    // (ii) and (iii): direct sum.
    let sum = l1_span.sum(l2_span);
    if sum.dim() != l.ldim {
        return Err(DecomposeFailure::SumNotEverything { sum_dim: sum.dim(), ldim: l.ldim });
    }
    let inter = exactlin::intersect(l1_span, l2_span).expect("same ambient");
    if inter.dim() != 0 {
        return Err(DecomposeFailure::IntersectionNonzero { dim: inter.dim() });
    }

    let restrict = |span: &Subspace, basis: &[Vec<Scalar>]| -> AnchoredLie {
        let d = basis.len();
        let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(d); d]; d];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                let b = l.bracket_vec(bi, bj);
                brackets[i][j] = span
                    .coordinates(&SparseVec::from_dense(&b))
                    .expect("closure verified above");
            }
        }
        let anchor = basis.iter().map(|v| l.anchor_of(v)).collect();
        AnchoredLie::new(l.base.clone(), d, brackets, anchor)
    };
    let ideal = restrict(l1_span, &l1_basis);
    let sub = restrict(l2_span, &l2_basis);

    // delta(X'') = [X'', -] on ideal coordinates.
    let delta: Vec<Mat> = l2_basis
        .iter()
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = l1_basis
                .iter()
                .map(|w| {
                    let b = l.bracket_vec(v, w);
                    l1_span.coordinates(&SparseVec::from_dense(&b)).expect("ideal verified")
                })
                .collect();
            Mat::from_cols(&cols)
        })
        .collect();

    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(l.ldim);
    cols.extend(l2_basis.iter().cloned());
    cols.extend(l1_basis.iter().cloned());
    let witness = Mat::from_cols(&cols);

    Ok(SemidirectDecomposition { delta, witness, sub, ideal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};

    fn eps_derivation() -> Mat {
        // eps -> eps on the dual numbers
        Mat::from_i64(&[&[0, 0], &[0, 1]])
    }

    #[test]
    fn abelian_with_zero_anchor_is_valid() {
        let base = FinAlgebra::dual_numbers();
        let l = AnchoredLie::abelian(base, alloc::vec![Mat::zero(2, 2)]);
        assert!(l.validate().is_ok());
    }

    #[test]
    fn sl2_with_zero_anchor_is_valid() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        assert!(l.validate().is_ok());
    }

    #[test]
    fn eps_scaling_anchor_is_valid() {
        let l = AnchoredLie::single_derivation(FinAlgebra::dual_numbers(), eps_derivation());
        assert!(l.validate().is_ok());
    }

    #[test]
    fn non_derivation_anchor_is_reported() {
        // eps -> 1 violates Leibniz on (eps, eps).
        let bad = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        let l = AnchoredLie::single_derivation(FinAlgebra::dual_numbers(), bad);
        let r = l.validate();
        assert!(r.findings.iter().any(|f| f.check == "anchor-leibniz"));
    }

    #[test]
    fn identity_is_a_morphism() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        assert!(is_morphism(&Mat::identity(3), &l, &l).unwrap());
    }

    #[test]
    fn zero_map_fails_when_anchor_is_nonzero() {
        let l = AnchoredLie::single_derivation(FinAlgebra::dual_numbers(), eps_derivation());
        assert!(!is_morphism(&Mat::zero(1, 1), &l, &l).unwrap());
    }

    #[test]
    fn semidirect_with_trivial_factor_is_the_other_factor() {
        let base = FinAlgebra::dual_numbers();
        let l1 = AnchoredLie::single_derivation(base.clone(), eps_derivation());
        let l2 = AnchoredLie::zero_lie(base);
        let s = semidirect(&l2, &l1, &[]).unwrap();
        assert_eq!(s, l1);
    }

    #[test]
    fn semidirect_with_zero_action_is_the_direct_sum() {
        let base = FinAlgebra::rationals();
        let l1 = AnchoredLie::abelian(base.clone(), alloc::vec![Mat::zero(1, 1)]);
        let l2 = AnchoredLie::abelian(base, alloc::vec![Mat::zero(1, 1)]);
        let s = semidirect(&l2, &l1, &[Mat::zero(1, 1)]).unwrap();
        assert!(s.validate().is_ok());
        assert!(s.brackets_are_zero());
    }

    #[test]
    fn two_dimensional_semidirect_bracket_table() {
        // L'' = span{X}, L' = span{Y}, delta(X)(Y) = Y, zero anchors.
        let base = FinAlgebra::rationals();
        let l1 = AnchoredLie::abelian(base.clone(), alloc::vec![Mat::zero(1, 1)]);
        let l2 = AnchoredLie::abelian(base, alloc::vec![Mat::zero(1, 1)]);
        let s = semidirect(&l2, &l1, &[Mat::identity(1)]).unwrap();
        assert!(s.validate().is_ok());
        // [(X,0),(0,Y)] = (0,Y)
        assert_eq!(s.bracket_basis(0, 1), &[int(0), int(1)]);
        assert_eq!(s.bracket_basis(1, 0), &[int(0), int(-1)]);
    }

    #[test]
    fn semidirect_rejects_incompatible_anchor() {
        // With delta(X)(Y) = Y, compatibility demands
        // [omega(X), omega(Y)] = omega(Y); equal anchors make the left side
        // zero while the right side is not.
        let base = FinAlgebra::dual_numbers();
        let l1 = AnchoredLie::single_derivation(base.clone(), eps_derivation());
        let l2 = AnchoredLie::single_derivation(base, eps_derivation());
        let err = semidirect(&l2, &l1, &[Mat::identity(1)]).unwrap_err();
        match err {
            Error::Precondition { context, .. } => assert_eq!(context, "semidirect"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn decompose_whole_space_as_ideal() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        let all = Subspace::full(3);
        let none = Subspace::zero(3);
        let d = decompose_semidirect(&l, &all, &none).unwrap();
        assert_eq!(d.sub.ldim(), 0);
        assert_eq!(d.ideal.ldim(), 3);
    }

    #[test]
    fn decompose_direct_sum_of_ideals() {
        // Abelian 2-dim: both lines are ideals, delta = 0.
        let base = FinAlgebra::rationals();
        let l = AnchoredLie::abelian(base, alloc::vec![Mat::zero(1, 1), Mat::zero(1, 1)]);
        let a = Subspace::from_dense_rows(2, &[unit_vec(2, 0)]);
        let b = Subspace::from_dense_rows(2, &[unit_vec(2, 1)]);
        let d = decompose_semidirect(&l, &a, &b).unwrap();
        assert!(d.delta[0].is_zero());
    }

    #[test]
    fn decompose_reports_non_ideal() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        // span{e} is not an ideal in sl2.
        let e_line = Subspace::from_dense_rows(3, &[unit_vec(3, 0)]);
        let rest = Subspace::from_dense_rows(3, &[unit_vec(3, 1), unit_vec(3, 2)]);
        match decompose_semidirect(&l, &e_line, &rest) {
            Err(DecomposeFailure::NotAnIdeal { .. }) => {}
            other => panic!("expected NotAnIdeal, got {other:?}"),
        }
    }

    #[test]
    fn decompose_recovers_semidirect_delta() {
        // Round trip: build L'' x_delta L' then decompose along the canonical spans.
        let base = FinAlgebra::rationals();
        let l1 = AnchoredLie::abelian(base.clone(), alloc::vec![Mat::zero(1, 1), Mat::zero(1, 1)]);
        let l2 = AnchoredLie::abelian(base, alloc::vec![Mat::zero(1, 1)]);
        // delta(X) = diag(1, 2) acting on the abelian plane
        let delta = Mat::from_i64(&[&[1, 0], &[0, 2]]);
        let s = semidirect(&l2, &l1, &[delta.clone()]).unwrap();
        assert!(s.validate().is_ok());
        let l2_span = Subspace::from_dense_rows(3, &[unit_vec(3, 0)]);
        let l1_span = Subspace::from_dense_rows(3, &[unit_vec(3, 1), unit_vec(3, 2)]);
        let d = decompose_semidirect(&s, &l1_span, &l2_span).unwrap();
        assert_eq!(d.delta, alloc::vec![delta]);
        // The witness must be an isomorphism of anchored Lie algebras from
        // the rebuilt semi-direct product back to s.
        let rebuilt = semidirect(&d.sub, &d.ideal, &d.delta).unwrap();
        assert!(is_morphism(&d.witness, &rebuilt, &s).unwrap());
        assert_eq!(d.witness.rank(), 3);
    }
}
