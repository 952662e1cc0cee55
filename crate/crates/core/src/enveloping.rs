//! The truncated universal enveloping algebra `F_N(U(L))` of an anchored Lie
//! algebra: PBW basis, normal-order rewriting, coproduct, counit and the
//! module-algebra action on the base.
//!
//! `U(L)` itself is infinite-dimensional; a mandatory truncation degree `N`
//! bounds every object. Products that would exceed `N` raise
//! [`Error::DegreeOverflow`] instead of silently dropping terms, so no
//! algebraic identity is ever tested on a truncated value.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::anchored_lie::AnchoredLie;
use crate::error::{Error, Result};
use crate::exactlin::{self, binomial, Scalar};

/// A PBW monomial `x_1^{k_1} ... x_m^{k_m}` over the ordered Lie basis,
/// stored as its exponent multi-index.
///
/// Ordered by degree first, then lexicographically on the exponents; this is
/// the basis enumeration order everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwMono {
    exps: Vec<u32>,
}

impl PbwMono {
    pub fn new(exps: Vec<u32>) -> Self {
        PbwMono { exps }
    }

    pub fn empty(ldim: usize) -> Self {
        PbwMono { exps: alloc::vec![0; ldim] }
    }

    pub fn generator(ldim: usize, i: usize) -> Self {
        let mut exps = alloc::vec![0; ldim];
        exps[i] = 1;
        PbwMono { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_empty_mono(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    /// The underlying sorted word of generator indices.
    fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &k) in self.exps.iter().enumerate() {
            for _ in 0..k {
                w.push(i);
            }
        }
        w
    }

    fn from_sorted_word(ldim: usize, w: &[usize]) -> Self {
        let mut exps = alloc::vec![0; ldim];
        for &i in w {
            exps[i] += 1;
        }
        PbwMono { exps }
    }
}

impl PartialOrd for PbwMono {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PbwMono {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

/// Sparse element of `F_N(U(L))`: zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvElement {
    terms: BTreeMap<PbwMono, Scalar>,
    truncation: u32,
}

impl EnvElement {
    pub fn zero(truncation: u32) -> Self {
        EnvElement { terms: BTreeMap::new(), truncation }
    }

    pub fn from_terms(
        truncation: u32,
        terms: impl IntoIterator<Item = (PbwMono, Scalar)>,
    ) -> Self {
        let mut out = EnvElement::zero(truncation);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree in the support (zero for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMono::degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &PbwMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: PbwMono, c: Scalar) {
        assert!(m.degree() <= self.truncation, "term exceeds truncation");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &EnvElement) -> EnvElement {
        assert_eq!(self.truncation, other.truncation);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> EnvElement {
        if c.is_zero() {
            return EnvElement::zero(self.truncation);
        }
        EnvElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            truncation: self.truncation,
        }
    }

    /// Counit: the coefficient of the empty monomial.
    pub fn counit(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_empty_mono())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }
}

/// Sparse element of `U (x) U`, both factors truncated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnvTensor2 {
    pub terms: BTreeMap<(PbwMono, PbwMono), Scalar>,
}

impl EnvTensor2 {
    pub fn add_term(&mut self, key: (PbwMono, PbwMono), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Sparse element of `U (x) U (x) U`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnvTensor3 {
    pub terms: BTreeMap<(PbwMono, PbwMono, PbwMono), Scalar>,
}

impl EnvTensor3 {
    pub fn add_term(&mut self, key: (PbwMono, PbwMono, PbwMono), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// The truncated enveloping algebra of an anchored Lie algebra, with its PBW
/// basis enumerated once in degree-then-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    lie: AnchoredLie,
    truncation: u32,
    basis: Vec<PbwMono>,
    index: BTreeMap<PbwMono, usize>,
}

/// All PBW monomials in `ldim` generators of degree at most `n`, in
/// degree-then-lex order. The count is `sum_{k<=n} C(ldim+k-1, k)`.
pub fn pbw_basis(ldim: usize, n: u32) -> Vec<PbwMono> {
    let mut out = Vec::new();
    for d in 0..=n {
        if ldim == 0 {
            if d == 0 {
                out.push(PbwMono::empty(0));
            }
            continue;
        }
        let mut exps = alloc::vec![0u32; ldim];
        compositions(d, 0, &mut exps, &mut out);
    }
    out
}

fn compositions(remaining: u32, pos: usize, exps: &mut Vec<u32>, out: &mut Vec<PbwMono>) {
    if pos == exps.len() - 1 {
        exps[pos] = remaining;
        out.push(PbwMono::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for k in 0..=remaining {
        exps[pos] = k;
        compositions(remaining - k, pos + 1, exps, out);
    }
    exps[pos] = 0;
}

impl Envelope {
    pub fn new(lie: AnchoredLie, truncation: u32) -> Self {
        let basis = pbw_basis(lie.ldim(), truncation);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Envelope { lie, truncation, basis, index }
    }

    pub fn lie(&self) -> &AnchoredLie {
        &self.lie
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn basis(&self) -> &[PbwMono] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mono_index(&self, m: &PbwMono) -> usize {
        self.index[m]
    }

    pub fn one(&self) -> EnvElement {
        EnvElement::from_terms(self.truncation, [(PbwMono::empty(self.lie.ldim()), Scalar::one())])
    }

    pub fn generator(&self, i: usize) -> EnvElement {
        EnvElement::from_terms(
            self.truncation,
            [(PbwMono::generator(self.lie.ldim(), i), Scalar::one())],
        )
    }

    /// Degree-one element from Lie coordinates.
    pub fn from_lie(&self, x: &[Scalar]) -> EnvElement {
        EnvElement::from_terms(
            self.truncation,
            x.iter()
                .enumerate()
                .map(|(i, c)| (PbwMono::generator(self.lie.ldim(), i), c.clone())),
        )
    }

    pub fn element_to_vec(&self, u: &EnvElement) -> Vec<Scalar> {
        let mut v = exactlin::zero_vec(self.dim());
        for (m, c) in u.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn element_from_vec(&self, v: &[Scalar]) -> EnvElement {
        EnvElement::from_terms(
            self.truncation,
            v.iter().enumerate().map(|(i, c)| (self.basis[i].clone(), c.clone())),
        )
    }

    /// Product of two monomials, rewritten into the PBW basis by repeatedly
    /// replacing `x_j x_i` (`j > i`) with `x_i x_j + [x_j, x_i]`. Each rewrite
    /// lowers the inversion count or the word length, so this terminates.
    pub fn mul_mono(&self, a: &PbwMono, b: &PbwMono) -> Result<EnvElement> {
        let total = a.degree() + b.degree();
        if total > self.truncation {
            return Err(Error::DegreeOverflow { degree: total, truncation: self.truncation });
        }
        let ldim = self.lie.ldim();
        let mut word = a.word();
        word.extend(b.word());
        let mut out = EnvElement::zero(self.truncation);
        let mut work: Vec<(Scalar, Vec<usize>)> = alloc::vec![(Scalar::one(), word)];
        while let Some((coeff, w)) = work.pop() {
            match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
                None => out.add_term(PbwMono::from_sorted_word(ldim, &w), coeff),
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    // bracket correction [x_{w[i]}, x_{w[i+1]}]
                    let f = self.lie.bracket_basis(w[i], w[i + 1]);
                    for (k, c) in f.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut shorter = Vec::with_capacity(w.len() - 1);
                        shorter.extend_from_slice(&w[..i]);
                        shorter.push(k);
                        shorter.extend_from_slice(&w[i + 2..]);
                        work.push((&coeff * c, shorter));
                    }
                    work.push((coeff, swapped));
                }
            }
        }
        Ok(out)
    }

    /// Product in `F_N(U)`; errors if the factor degrees sum above `N`.
    pub fn mul(&self, u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
        let total = u.degree() + v.degree();
        if total > self.truncation {
            return Err(Error::DegreeOverflow { degree: total, truncation: self.truncation });
        }
        let mut out = EnvElement::zero(self.truncation);
        for (ma, ca) in u.terms() {
            for (mb, cb) in v.terms() {
                let prod = self.mul_mono(ma, mb)?;
                out = out.add(&prod.scale(&(ca * cb)));
            }
        }
        Ok(out)
    }

    /// Left-to-right product of several elements.
    pub fn product_of(&self, factors: &[EnvElement]) -> Result<EnvElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Coproduct of a monomial: generators are primitive and the coproduct
    /// is multiplicative, which on ordered monomials collapses to the
    /// binomial expansion
    /// `Delta(x^a) = sum_{b <= a} prod_i C(a_i, b_i) x^b (x) x^(a-b)`.
    pub fn coproduct_mono(&self, m: &PbwMono) -> EnvTensor2 {
        let mut out = EnvTensor2::default();
        let mut left = alloc::vec![0u32; m.exps.len()];
        split2_rec(m, 0, &mut left, Scalar::one(), &mut out);
        out
    }

    pub fn coproduct(&self, u: &EnvElement) -> EnvTensor2 {
        let mut out = EnvTensor2::default();
        for (m, c) in u.terms() {
            for (key, v) in self.coproduct_mono(m).terms {
                out.add_term(key, v * c);
            }
        }
        out
    }

    /// `(Delta (x) id) . Delta`, the three-part multinomial expansion.
    pub fn iterated_coproduct(&self, u: &EnvElement) -> EnvTensor3 {
        let mut out = EnvTensor3::default();
        for (m, c) in u.terms() {
            for ((l, r), v) in self.coproduct_mono(m).terms {
                for ((ll, lr), w) in self.coproduct_mono(&l).terms {
                    out.add_term((ll, lr, r.clone()), &w * &v * c);
                }
            }
        }
        out
    }

    /// `(id (x) Delta) . Delta`; agrees with [`Envelope::iterated_coproduct`]
    /// by coassociativity.
    pub fn iterated_coproduct_right(&self, u: &EnvElement) -> EnvTensor3 {
        let mut out = EnvTensor3::default();
        for (m, c) in u.terms() {
            for ((l, r), v) in self.coproduct_mono(m).terms {
                for ((rl, rr), w) in self.coproduct_mono(&r).terms {
                    out.add_term((l.clone(), rl, rr), &w * &v * c);
                }
            }
        }
        out
    }

    /// The module-algebra action of `U(L)` on the base: a monomial
    /// `x_1^{k_1} ... x_m^{k_m}` acts as
    /// `omega(X_1)^{k_1} . ... . omega(X_m)^{k_m}` (rightmost factor applied
    /// first).
    pub fn act_on_base(&self, u: &EnvElement, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.lie.base().dim();
        assert_eq!(a.len(), n);
        let mut out = exactlin::zero_vec(n);
        for (m, c) in u.terms() {
            let v = self.act_mono_on_base(m, a);
            exactlin::add_scaled(&mut out, &v, c);
        }
        out
    }

    /// Same action, on a single monomial.
    pub fn act_mono_on_base(&self, m: &PbwMono, a: &[Scalar]) -> Vec<Scalar> {
        let mut v = a.to_vec();
        for i in (0..m.exps.len()).rev() {
            for _ in 0..m.exps[i] {
                v = self.lie.anchor()[i].apply(&v);
            }
        }
        v
    }
}

fn split2_rec(m: &PbwMono, pos: usize, left: &mut Vec<u32>, coeff: Scalar, out: &mut EnvTensor2) {
    if pos == m.exps.len() {
        let l = PbwMono::new(left.clone());
        let r = PbwMono::new(m.exps.iter().zip(left.iter()).map(|(a, b)| a - b).collect());
        out.add_term((l, r), coeff);
        return;
    }
    for b in 0..=m.exps[pos] {
        left[pos] = b;
        let c = &coeff * binomial(m.exps[pos], b);
        split2_rec(m, pos + 1, left, c, out);
    }
    left[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinAlgebra;
    use crate::exactlin::{int, unit_vec, Mat};
    use num_traits::ToPrimitive;

    fn single_gen(n: u32) -> Envelope {
        let base = FinAlgebra::dual_numbers();
        let d = Mat::from_i64(&[&[0, 0], &[0, 1]]);
        Envelope::new(AnchoredLie::single_derivation(base, d), n)
    }

    #[test]
    fn pbw_counts() {
        assert_eq!(pbw_basis(1, 2).len(), 3); // 1, x, x^2
        assert_eq!(pbw_basis(2, 2).len(), 6); // 1 + 2 + 3
        assert_eq!(pbw_basis(3, 3).len(), 20); // 1 + 3 + 6 + 10
        assert_eq!(pbw_basis(0, 3).len(), 1); // only the empty monomial
    }

    #[test]
    fn pbw_order_is_degree_then_lex() {
        let basis = pbw_basis(2, 2);
        let exps: Vec<&[u32]> = basis.iter().map(PbwMono::exps).collect();
        assert_eq!(
            exps,
            alloc::vec![
                &[0u32, 0][..],
                &[0, 1][..],
                &[1, 0][..],
                &[0, 2][..],
                &[1, 1][..],
                &[2, 0][..]
            ]
        );
    }

    #[test]
    fn one_is_neutral() {
        let env = single_gen(2);
        let x = env.generator(0);
        assert_eq!(env.mul(&env.one(), &x).unwrap(), x);
        assert_eq!(env.mul(&x, &env.one()).unwrap(), x);
    }

    #[test]
    fn abelian_generators_commute() {
        let base = FinAlgebra::rationals();
        let l = AnchoredLie::abelian(base, alloc::vec![Mat::zero(1, 1), Mat::zero(1, 1)]);
        let env = Envelope::new(l, 2);
        let x1 = env.generator(0);
        let x2 = env.generator(1);
        assert_eq!(env.mul(&x2, &x1).unwrap(), env.mul(&x1, &x2).unwrap());
    }

    #[test]
    fn single_rewrite_step() {
        // [X_2, X_1] = X_1 (indices 1, 0): x2 * x1 = x1 x2 + x1.
        let base = FinAlgebra::rationals();
        let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(2); 2]; 2];
        brackets[1][0] = unit_vec(2, 0);
        brackets[0][1] = alloc::vec![int(-1), int(0)];
        let l = AnchoredLie::new(base, 2, brackets, alloc::vec![Mat::zero(1, 1); 2]);
        assert!(l.validate().is_ok());
        let env = Envelope::new(l, 2);
        let prod = env.mul(&env.generator(1), &env.generator(0)).unwrap();
        let expected = EnvElement::from_terms(
            2,
            [
                (PbwMono::new(alloc::vec![1, 1]), int(1)),
                (PbwMono::new(alloc::vec![1, 0]), int(1)),
            ],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn overflow_is_an_error() {
        let env = single_gen(2);
        let x = env.generator(0);
        let x2 = env.mul(&x, &x).unwrap();
        match env.mul(&x2, &x) {
            Err(Error::DegreeOverflow { degree: 3, truncation: 2 }) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn normal_order_is_associative_within_range() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        let env = Envelope::new(l, 3);
        let e = env.generator(0);
        let f = env.generator(1);
        let h = env.generator(2);
        let lhs = env.mul(&env.mul(&e, &f).unwrap(), &h).unwrap();
        let rhs = env.mul(&e, &env.mul(&f, &h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = env.mul(&env.mul(&f, &e).unwrap(), &e).unwrap();
        let rhs = env.mul(&f, &env.mul(&e, &e).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_order_associativity_exhaustive_sl2() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        let env = Envelope::new(l, 3);
        let deg1: Vec<&PbwMono> = env.basis().iter().filter(|m| m.degree() == 1).collect();
        for a in &deg1 {
            for b in &deg1 {
                for c in &deg1 {
                    let ea = EnvElement::from_terms(3, [((*a).clone(), int(1))]);
                    let eb = EnvElement::from_terms(3, [((*b).clone(), int(1))]);
                    let ec = EnvElement::from_terms(3, [((*c).clone(), int(1))]);
                    let lhs = env.mul(&env.mul(&ea, &eb).unwrap(), &ec).unwrap();
                    let rhs = env.mul(&ea, &env.mul(&eb, &ec).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn coproduct_of_one_and_generator() {
        let env = single_gen(2);
        let one = PbwMono::empty(1);
        let x = PbwMono::new(alloc::vec![1]);
        let d1 = env.coproduct(&env.one());
        assert_eq!(d1.terms.len(), 1);
        assert_eq!(d1.terms[&(one.clone(), one.clone())], int(1));
        let dx = env.coproduct(&env.generator(0));
        assert_eq!(dx.terms.len(), 2);
        assert_eq!(dx.terms[&(x.clone(), one.clone())], int(1));
        assert_eq!(dx.terms[&(one, x)], int(1));
    }

    #[test]
    fn coproduct_of_square_has_binomial_middle() {
        let env = single_gen(2);
        let x = env.generator(0);
        let x2 = env.mul(&x, &x).unwrap();
        let d = env.coproduct(&x2);
        let one = PbwMono::empty(1);
        let xm = PbwMono::new(alloc::vec![1]);
        let x2m = PbwMono::new(alloc::vec![2]);
        assert_eq!(d.terms[&(x2m.clone(), one.clone())], int(1));
        assert_eq!(d.terms[&(xm.clone(), xm)], int(2));
        assert_eq!(d.terms[&(one, x2m)], int(1));
    }

    #[test]
    fn iterated_coproduct_multinomials() {
        let env = single_gen(2);
        let x = env.generator(0);
        let x2 = env.mul(&x, &x).unwrap();
        let d = env.iterated_coproduct(&x2);
        let g = |k: u32| PbwMono::new(alloc::vec![k]);
        // multinomial pattern 1,2,2,1,2,1 over the six 3-part splits of x^2
        assert_eq!(d.terms[&(g(2), g(0), g(0))], int(1));
        assert_eq!(d.terms[&(g(1), g(1), g(0))], int(2));
        assert_eq!(d.terms[&(g(1), g(0), g(1))], int(2));
        assert_eq!(d.terms[&(g(0), g(2), g(0))], int(1));
        assert_eq!(d.terms[&(g(0), g(1), g(1))], int(2));
        assert_eq!(d.terms[&(g(0), g(0), g(2))], int(1));
        assert_eq!(d, env.iterated_coproduct_right(&x2));
        // primitives spread over three slots
        let dx = env.iterated_coproduct(&env.generator(0));
        assert_eq!(dx.terms.len(), 3);
        let d1 = env.iterated_coproduct(&env.one());
        assert_eq!(d1.terms.len(), 1);
    }

    #[test]
    fn coassociativity_and_counit_on_all_basis_elements() {
        let l = AnchoredLie::sl2_zero_anchor(FinAlgebra::rationals());
        let env = Envelope::new(l, 3);
        for m in env.basis() {
            let u = EnvElement::from_terms(3, [(m.clone(), int(1))]);
            assert_eq!(env.iterated_coproduct(&u), env.iterated_coproduct_right(&u));
            let d = env.coproduct(&u);
            let mut left = EnvElement::zero(3);
            let mut right = EnvElement::zero(3);
            for ((a, b), c) in &d.terms {
                if a.is_empty_mono() {
                    left.add_term(b.clone(), c.clone());
                }
                if b.is_empty_mono() {
                    right.add_term(a.clone(), c.clone());
                }
            }
            assert_eq!(left, u, "counit law fails on {m:?}");
            assert_eq!(right, u);
        }
    }

    #[test]
    fn action_on_base() {
        let env = single_gen(2);
        let eps = unit_vec(2, 1);
        assert_eq!(env.act_on_base(&env.one(), &eps), eps);
        // x . 1_A = 0
        let one_a = unit_vec(2, 0);
        assert_eq!(env.act_on_base(&env.generator(0), &one_a), exactlin::zero_vec(2));
        // x^2 . eps = eps for omega(X): eps -> eps
        let x = env.generator(0);
        let x2 = env.mul(&x, &x).unwrap();
        assert_eq!(env.act_on_base(&x2, &eps), eps);
    }

    #[test]
    fn module_algebra_law_on_basis() {
        // u.(ab) = sum (u_(1).a)(u_(2).b) for all basis u, a, b.
        let env = single_gen(3);
        let base = env.lie().base().clone();
        for m in env.basis() {
            let u = EnvElement::from_terms(3, [(m.clone(), int(1))]);
            for i in 0..2 {
                for j in 0..2 {
                    let a = unit_vec(2, i);
                    let b = unit_vec(2, j);
                    let lhs = env.act_on_base(&u, &base.mul_vec(&a, &b));
                    let mut rhs = exactlin::zero_vec(2);
                    for ((l, r), c) in &env.coproduct(&u).terms {
                        let la = env.act_mono_on_base(l, &a);
                        let rb = env.act_mono_on_base(r, &b);
                        exactlin::add_scaled(&mut rhs, &base.mul_vec(&la, &rb), c);
                    }
                    assert_eq!(lhs, rhs, "module-algebra law fails on {m:?}");
                }
            }
        }
    }

    #[test]
    fn dims_match_stars_and_bars() {
        for (m, n) in [(1usize, 3u32), (2, 3), (3, 2), (4, 3)] {
            let count: usize = (0..=n)
                .map(|k| {
                    binomial(m as u32 + k.saturating_sub(1), k).to_integer().to_usize().unwrap()
                })
                .sum();
            assert_eq!(pbw_basis(m, n).len(), count);
        }
    }
}
