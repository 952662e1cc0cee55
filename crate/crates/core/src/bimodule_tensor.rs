//! Bimodules induced by a ring map from the enveloping algebra, their tensor
//! product over the base as an explicit quotient, and the Takeuchi
//! x-product subspace.
//!
//! The tensor product over `A` is materialized as a [`QuotientSpace`] with a
//! fixed section, so equality of tensors (and of the coproducts built on
//! them later) is decidable coordinate equality. Relations are generated
//! over basis elements only, which suffices by bilinearity.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, quotient_by, ColMap, QuotientSpace, Scalar, SparseVec, Subspace};
use crate::report::Report;

/// Right ("black") actions `m -> m s(a)` and `m -> m t(a°)`, one column-sparse
/// map per basis element of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightActions {
    pub rs: Vec<ColMap>,
    pub rt: Vec<ColMap>,
}

/// An `A`-bimodule whose structure comes from commuting algebra maps
/// `s: A -> End(M)` and `t: A^op -> End(M)` acting on the left; the optional
/// right actions are needed only for the Takeuchi product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaBimodule {
    base: FinAlgebra,
    vdim: usize,
    s: Vec<ColMap>,
    t: Vec<ColMap>,
    right: Option<RightActions>,
}

impl EtaBimodule {
    pub fn new(
        base: FinAlgebra,
        vdim: usize,
        s: Vec<ColMap>,
        t: Vec<ColMap>,
        right: Option<RightActions>,
    ) -> Self {
        assert_eq!(s.len(), base.dim());
        assert_eq!(t.len(), base.dim());
        for m in s.iter().chain(&t) {
            assert_eq!((m.rows(), m.ncols()), (vdim, vdim));
        }
        if let Some(r) = &right {
            assert_eq!(r.rs.len(), base.dim());
            assert_eq!(r.rt.len(), base.dim());
        }
        EtaBimodule { base, vdim, s, t, right }
    }

    /// The bimodule of an algebra `B` carrying a ring map `eta: A^e -> B`
    /// (`eta` is `bdim x dim(A)^2` on the tensor basis `e_i (x) e_j°`,
    /// flattened `i*dim + j`). Both left and right multiplications are total,
    /// so the right actions are always available here.
    pub fn from_algebra_eta(base: &FinAlgebra, b: &FinAlgebra, eta: &crate::exactlin::Mat) -> Self {
        let n = base.dim();
        assert_eq!(eta.rows(), b.dim());
        assert_eq!(eta.cols(), n * n);
        let unit = base.unit().to_vec();
        let s_vec = |a: usize| -> Vec<Scalar> {
            // eta(e_a (x) 1°)
            let mut v = exactlin::zero_vec(n * n);
            for (q, c) in unit.iter().enumerate() {
                v[a * n + q] = c.clone();
            }
            eta.apply(&v)
        };
        let t_vec = |a: usize| -> Vec<Scalar> {
            // eta(1 (x) e_a°)
            let mut v = exactlin::zero_vec(n * n);
            for (p, c) in unit.iter().enumerate() {
                v[p * n + a] = c.clone();
            }
            eta.apply(&v)
        };
        let s = (0..n).map(|a| ColMap::from_mat(&b.left_mult(&s_vec(a)))).collect();
        let t = (0..n).map(|a| ColMap::from_mat(&b.left_mult(&t_vec(a)))).collect();
        let rs = (0..n).map(|a| ColMap::from_mat(&b.right_mult(&s_vec(a)))).collect();
        let rt = (0..n).map(|a| ColMap::from_mat(&b.right_mult(&t_vec(a)))).collect();
        EtaBimodule::new(base.clone(), b.dim(), s, t, Some(RightActions { rs, rt }))
    }

    pub fn base(&self) -> &FinAlgebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn s_act(&self) -> &[ColMap] {
        &self.s
    }

    pub fn t_act(&self) -> &[ColMap] {
        &self.t
    }

    pub fn right(&self) -> Option<&RightActions> {
        self.right.as_ref()
    }

    /// Left action of an arbitrary base element through `s`.
    pub fn s_of(&self, a: &[Scalar]) -> ColMap {
        let mut out = ColMap::zero(self.vdim, self.vdim);
        for (i, c) in a.iter().enumerate() {
            out.add_scaled(&self.s[i], c);
        }
        out
    }

    pub fn t_of(&self, a: &[Scalar]) -> ColMap {
        let mut out = ColMap::zero(self.vdim, self.vdim);
        for (i, c) in a.iter().enumerate() {
            out.add_scaled(&self.t[i], c);
        }
        out
    }

    /// Checks that `s` and `t` are unital algebra actions and that they
    /// commute with each other.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let n = self.base.dim();
        let id = ColMap::identity(self.vdim);
        if self.s_of(self.base.unit()) != id {
            report.push("s-unital", "s(1) != id");
        }
        if self.t_of(self.base.unit()) != id {
            report.push("t-unital", "t(1°) != id");
        }
        for i in 0..n {
            for j in 0..n {
                let mut s_ij = ColMap::zero(self.vdim, self.vdim);
                let mut t_ij = ColMap::zero(self.vdim, self.vdim);
                for k in 0..n {
                    s_ij.add_scaled(&self.s[k], self.base.sc(i, j, k));
                    // t is an action of the opposite algebra
                    t_ij.add_scaled(&self.t[k], self.base.sc(j, i, k));
                }
                if self.s[i].compose(&self.s[j]) != s_ij {
                    report.push("s-multiplicative", format!("s(e{i})s(e{j}) != s(e{i} e{j})"));
                }
                if self.t[i].compose(&self.t[j]) != t_ij {
                    report.push("t-multiplicative", format!("t(e{i}°)t(e{j}°) != t((e{j} e{i})°)"));
                }
                if self.s[i].compose(&self.t[j]) != self.t[j].compose(&self.s[i]) {
                    report.push("st-commute", format!("s(e{i}) and t(e{j}°) do not commute"));
                }
            }
        }
        report
    }
}

/// The tensor product `M (x)_A N`, materialized as a quotient of the plain
/// tensor space with ambient index `p * vdim(N) + q`.
#[derive(Debug, Clone)]
pub struct TensorOverA {
    left: EtaBimodule,
    right: EtaBimodule,
    space: QuotientSpace,
}

/// Quotient of `M (x) N` by `span{ t(a°)m (x) n - m (x) s(a)n }` over basis
/// elements `a, m, n`.
pub fn tensor_over_a(m: &EtaBimodule, n: &EtaBimodule) -> Result<TensorOverA> {
    if m.base != n.base {
        return Err(Error::Precondition {
            context: "tensor_over_a",
            witness: alloc::string::String::from("factors live over different base algebras"),
        });
    }
    let (vm, vn) = (m.vdim, n.vdim);
    let ambient = vm * vn;
    let mut relations: Vec<SparseVec> = Vec::new();
    for a in 0..m.base.dim() {
        let ta = &m.t[a];
        let sa = &n.s[a];
        for p in 0..vm {
            let tcol = ta.col(p);
            for q in 0..vn {
                let scol = sa.col(q);
                let mut row = SparseVec::from_terms(
                    tcol.iter().map(|(r, c)| (r * vn + q, c.clone())),
                );
                row.add_scaled(
                    &SparseVec::from_terms(scol.iter().map(|(r, c)| (p * vn + r, c.clone()))),
                    &-exactlin::one(),
                );
                if !row.is_zero() {
                    relations.push(row);
                }
            }
        }
    }
    let space = quotient_by(ambient, relations);
    Ok(TensorOverA { left: m.clone(), right: n.clone(), space })
}

/// Induced left and right `A`-actions on a tensor quotient.
#[derive(Debug, Clone)]
pub struct InducedActions {
    /// `a . (m (x) n) = s(a)m (x) n`, one map per basis element of `A`.
    pub left: Vec<ColMap>,
    /// `(m (x) n) . a = m (x) t(a°)n`.
    pub right: Vec<ColMap>,
}

impl TensorOverA {
    pub fn base(&self) -> &FinAlgebra {
        &self.left.base
    }

    pub fn left_factor(&self) -> &EtaBimodule {
        &self.left
    }

    pub fn right_factor(&self) -> &EtaBimodule {
        &self.right
    }

    pub fn space(&self) -> &QuotientSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Class of a pure tensor of basis elements.
    pub fn class_of_basis_pair(&self, p: usize, q: usize) -> SparseVec {
        self.space.project(&SparseVec::unit(p * self.right.vdim + q))
    }

    /// Class of an ambient vector indexed by `p * vdim(N) + q`.
    pub fn project(&self, ambient: &SparseVec) -> SparseVec {
        self.space.project(ambient)
    }

    /// Ambient representative of a class, via the fixed section.
    pub fn section(&self, class: &SparseVec) -> SparseVec {
        self.space.section(class)
    }

    /// The map `phi (x) id : M (x)_A N -> M' (x)_A N` induced in quotient
    /// coordinates by a map of left factors commuting with the actions;
    /// ill-definedness is reported as an error.
    fn induced_on_quotient(&self, ambient_map: impl Fn(&SparseVec) -> SparseVec) -> ColMap {
        let cols = (0..self.dim())
            .map(|j| self.project(&ambient_map(&self.section(&SparseVec::unit(j)))))
            .collect();
        ColMap::new(self.dim(), cols)
    }

    /// Ambient action `f (x) id` on `M (x) N`.
    fn tensor_left(&self, f: &ColMap, v: &SparseVec) -> SparseVec {
        let vn = self.right.vdim;
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            let (p, q) = (idx / vn, idx % vn);
            out.add_scaled(
                &SparseVec::from_terms(f.col(p).iter().map(|(r, w)| (r * vn + q, w.clone()))),
                c,
            );
        }
        out
    }

    /// Ambient action `id (x) g` on `M (x) N`.
    fn tensor_right(&self, g: &ColMap, v: &SparseVec) -> SparseVec {
        let vn = self.right.vdim;
        let mut out = SparseVec::new();
        for (idx, c) in v.iter() {
            let (p, q) = (idx / vn, idx % vn);
            out.add_scaled(
                &SparseVec::from_terms(g.col(q).iter().map(|(r, w)| (p * vn + r, w.clone()))),
                c,
            );
        }
        out
    }

    /// Checks that an ambient map preserves the relation subspace, so that it
    /// descends to the quotient.
    fn descends(&self, ambient_map: impl Fn(&SparseVec) -> SparseVec) -> bool {
        let e = self.space.relations().echelon();
        self.space.relations().basis().iter().all(|r| e.contains(&ambient_map(r)))
    }

    /// The matrices of `a.(-)` and `(-).a` on the quotient. Ill-defined
    /// actions are hard errors: they signal a broken input bimodule.
    pub fn induced_actions(&self) -> Result<InducedActions> {
        let n = self.base().dim();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for a in 0..n {
            let sa = self.left.s[a].clone();
            if !self.descends(|v| self.tensor_left(&sa, v)) {
                return Err(Error::IllDefinedAction { context: "left action on tensor quotient" });
            }
            left.push(self.induced_on_quotient(|v| self.tensor_left(&sa, v)));
            let ta = self.right.t[a].clone();
            if !self.descends(|v| self.tensor_right(&ta, v)) {
                return Err(Error::IllDefinedAction { context: "right action on tensor quotient" });
            }
            right.push(self.induced_on_quotient(|v| self.tensor_right(&ta, v)));
        }
        Ok(InducedActions { left, right })
    }

    /// The Takeuchi x-product: classes `sum m_i (x) n_i` with
    /// `sum m_i t(a°) (x) n_i = sum m_i (x) n_i s(a)` for every basis `a`.
    /// Requires the right actions on both factors.
    pub fn takeuchi_subspace(&self) -> Result<Subspace> {
        let lr = self.left.right.as_ref().ok_or(Error::MissingRightActions)?;
        let rr = self.right.right.as_ref().ok_or(Error::MissingRightActions)?;
        let mut rows: Vec<SparseVec> = Vec::new();
        for a in 0..self.base().dim() {
            // (m.t(a°)) (x) n - m (x) (n.s(a)) on quotient coordinates
            let map = self.induced_on_quotient(|v| {
                let mut out = self.tensor_left(&lr.rt[a], v);
                out.add_scaled(&self.tensor_right(&rr.rs[a], v), &-exactlin::one());
                out
            });
            rows.extend(map.transpose_rows());
        }
        Ok(exactlin::kernel_of_rows(self.dim(), rows))
    }

    /// The quotient itself as an eta-bimodule (for iterated tensors):
    /// `s(a) = s_M(a) (x) id`, `t(a°) = id (x) t_N(a°)`. No right actions.
    pub fn as_bimodule(&self) -> Result<EtaBimodule> {
        let acts = self.induced_actions()?;
        Ok(EtaBimodule::new(
            self.base().clone(),
            self.dim(),
            acts.left,
            acts.right,
            None,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{self, FinAlgebra};
    use crate::exactlin::{int, Mat};

    /// A^e as a bimodule over A via the identity ring map.
    fn env_bimodule(a: &FinAlgebra) -> EtaBimodule {
        let ae = algebra::enveloping(a);
        EtaBimodule::from_algebra_eta(a, &ae, &Mat::identity(ae.dim()))
    }

    #[test]
    fn trivial_base_gives_plain_tensor() {
        let k = FinAlgebra::rationals();
        let m = env_bimodule(&k);
        let t = tensor_over_a(&m, &m).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.space().relations().dim(), 0);
    }

    #[test]
    fn dual_number_envelope_tensor_has_dim_8() {
        // A2^e (x)_{A2} A2^e: 16-dim ambient, quotient dim 4*4*4/... = 8.
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        assert!(m.validate().is_ok());
        let t = tensor_over_a(&m, &m).unwrap();
        assert_eq!(t.space().ambient_dim(), 16);
        assert_eq!(t.dim(), 8);
    }

    #[test]
    fn dense_oracle_confirms_relation_rank() {
        // Independent dense-rref oracle for the same quotient.
        let a2 = FinAlgebra::dual_numbers();
        let ae = algebra::enveloping(&a2);
        let m = env_bimodule(&a2);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for a in 0..2 {
            // t(a°) = 1 (x) e_a°, s(a) = e_a (x) 1° as elements of A^e
            let mut t_el = exactlin::zero_vec(4);
            t_el[a] = int(1); // (0,a) since unit = e_0
            let mut s_el = exactlin::zero_vec(4);
            s_el[a * 2] = int(1);
            for p in 0..4 {
                for q in 0..4 {
                    let tp = ae.mul_vec(&t_el, &exactlin::unit_vec(4, p));
                    let sq = ae.mul_vec(&s_el, &exactlin::unit_vec(4, q));
                    let mut row = exactlin::zero_vec(16);
                    for (r, c) in tp.iter().enumerate() {
                        row[r * 4 + q] += c;
                    }
                    for (r, c) in sq.iter().enumerate() {
                        row[p * 4 + r] -= c;
                    }
                    rows.push(row);
                }
            }
        }
        let rank = Mat::from_rows(rows).rank();
        assert_eq!(rank, 8);
        let t = tensor_over_a(&m, &m).unwrap();
        assert_eq!(t.space().relations().dim(), rank);
    }

    #[test]
    fn relation_identifies_t_and_s_sides() {
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        let t = tensor_over_a(&m, &m).unwrap();
        // class(t(a°)m (x) n) = class(m (x) s(a)n) for all basis a, m, n
        for a in 0..2 {
            for p in 0..4 {
                for q in 0..4 {
                    let lhs = t.project(&t.tensor_left(&m.t[a], &SparseVec::unit(p * 4 + q)));
                    let rhs = t.project(&t.tensor_right(&m.s[a], &SparseVec::unit(p * 4 + q)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn induced_unit_action_is_identity() {
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        let t = tensor_over_a(&m, &m).unwrap();
        let acts = t.induced_actions().unwrap();
        // a = 1 is basis element 0 of the dual numbers
        assert_eq!(acts.left[0], ColMap::identity(t.dim()));
        assert_eq!(acts.right[0], ColMap::identity(t.dim()));
    }

    #[test]
    fn takeuchi_on_trivial_base_is_everything() {
        let k = FinAlgebra::rationals();
        let m = env_bimodule(&k);
        let t = tensor_over_a(&m, &m).unwrap();
        assert_eq!(t.takeuchi_subspace().unwrap().dim(), t.dim());
    }

    #[test]
    fn unit_tensor_unit_lies_in_takeuchi() {
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        let t = tensor_over_a(&m, &m).unwrap();
        let tak = t.takeuchi_subspace().unwrap();
        // 1 (x) 1: basis index 0 in A^e is e_0 (x) e_0° = 1 (x) 1°
        let cls = t.class_of_basis_pair(0, 0);
        assert!(tak.contains(&cls));
    }

    #[test]
    fn missing_right_actions_error() {
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        let t = tensor_over_a(&m, &m).unwrap();
        let stripped = t.as_bimodule().unwrap();
        let t2 = tensor_over_a(&stripped, &stripped).unwrap();
        match t2.takeuchi_subspace() {
            Err(Error::MissingRightActions) => {}
            other => panic!("expected MissingRightActions, got {other:?}"),
        }
    }

    #[test]
    fn iterated_tensor_builds() {
        let a2 = FinAlgebra::dual_numbers();
        let m = env_bimodule(&a2);
        let t2 = tensor_over_a(&m, &m).unwrap();
        let t2_bim = t2.as_bimodule().unwrap();
        let t3 = tensor_over_a(&t2_bim, &m).unwrap();
        // A^e (x)_A A^e (x)_A A^e has dimension dim(A)^(3+1) = 16
        assert_eq!(t3.dim(), 16);
    }
}
