//! The left-bialgebroid axiom suite: every law is an exact linear-algebra
//! identity in canonical coordinates, quantified over all basis instances
//! whose products are defined.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra;
use crate::bimodule_tensor::{tensor_over_a, TensorOverA};
use crate::error::Result;
use crate::exactlin::{self, ColMap, SparseVec};
use crate::report::{AxiomResult, AxiomSuite};

use super::GenBialgebroid;

/// How much of the suite to run. `Quick` covers the unit, ring-map,
/// bilinearity, counit and Takeuchi-containment laws; `Exhaustive` adds every
/// check that quantifies over basis pairs or triples of products
/// (associativity, multiplicativity of the coproduct, the left character
/// laws, the module-algebra law) and coassociativity through the triple
/// tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckLevel {
    Quick,
    Exhaustive,
}

/// Runs the full axiom suite.
pub fn check_bialgebroid(b: &GenBialgebroid) -> AxiomSuite {
    check_bialgebroid_level(b, CheckLevel::Exhaustive)
}

struct Ctx<'a> {
    b: &'a GenBialgebroid,
    suite: AxiomSuite,
}

impl<'a> Ctx<'a> {
    fn record(&mut self, axiom: &str, instances: usize, failure: Option<String>) {
        self.suite.results.push(AxiomResult { axiom: String::from(axiom), instances, failure });
    }
}

pub fn check_bialgebroid_level(b: &GenBialgebroid, level: CheckLevel) -> AxiomSuite {
    let mut ctx = Ctx { b, suite: AxiomSuite::default() };

    base_algebra(&mut ctx);
    total_algebra_unit(&mut ctx);
    eta_morphism(&mut ctx);
    st_commute(&mut ctx);
    delta_bilinear(&mut ctx);
    delta_source_target(&mut ctx);
    delta_unit(&mut ctx);
    counit_bilinear(&mut ctx);
    counit_st(&mut ctx);
    counit_unital(&mut ctx);
    coring_counit_laws(&mut ctx);
    takeuchi_containment(&mut ctx);

    if level == CheckLevel::Exhaustive {
        total_algebra_associativity(&mut ctx);
        coring_coassociativity(&mut ctx);
        delta_multiplicative(&mut ctx);
        counit_character(&mut ctx);
        delta_right_mult(&mut ctx);
        counit_switch(&mut ctx);
        module_algebra(&mut ctx);
    }

    ctx.suite
}

fn base_algebra(ctx: &mut Ctx) {
    let r = algebra::check_algebra(ctx.b.base());
    let n = ctx.b.base().dim();
    ctx.record(
        "base-algebra",
        n * n * n + 2 * n,
        r.findings.first().map(|f| format!("{}: {}", f.check, f.witness)),
    );
}

fn total_algebra_unit(ctx: &mut Ctx) {
    let b = ctx.b;
    let one = b.unit_sparse();
    let mut failure = None;
    for p in 0..b.dim() {
        let e = SparseVec::unit(p);
        let left = b.mul_vec(&one, &e).expect("degree-zero product");
        let right = b.mul_vec(&e, &one).expect("degree-zero product");
        if left != e || right != e {
            failure = Some(format!("unit law fails on basis {p}"));
            break;
        }
    }
    ctx.record("total-algebra-unit", 2 * b.dim(), failure);
}

fn total_algebra_associativity(ctx: &mut Ctx) {
    let b = ctx.b;
    let mut failure = None;
    let mut instances = 0usize;
    'outer: for p in 0..b.dim() {
        for q in 0..b.dim() {
            if !b.product_defined(p, q) {
                continue;
            }
            let pq = b.mul_basis(p, q).expect("defined").clone();
            for r in 0..b.dim() {
                if !b.product_defined(q, r)
                    || b.basis_degree(p) + b.basis_degree(q) + b.basis_degree(r)
                        > b.truncation().unwrap_or(u32::MAX)
                {
                    continue;
                }
                instances += 1;
                let qr = b.mul_basis(q, r).expect("defined").clone();
                let lhs = b.mul_vec(&pq, &SparseVec::unit(r)).expect("within degree");
                let rhs = b.mul_vec(&SparseVec::unit(p), &qr).expect("within degree");
                if lhs != rhs {
                    failure = Some(format!("({p} {q}) {r} != {p} ({q} {r})"));
                    break 'outer;
                }
            }
        }
    }
    ctx.record("total-algebra-associativity", instances, failure);
}

fn eta_morphism(ctx: &mut Ctx) {
    let b = ctx.b;
    let ae = algebra::enveloping(b.base());
    let mut failure = None;
    let eta_col =
        |u: usize| -> SparseVec { SparseVec::from_dense(&b.eta().col(u)) };
    // eta(1) = 1
    let unit_img = SparseVec::from_dense(&b.eta().apply(ae.unit()));
    if unit_img != b.unit_sparse() {
        failure = Some(String::from("eta(1) != 1_B"));
    }
    let dim = ae.dim();
    let mut instances = 1;
    if failure.is_none() {
        'outer: for u in 0..dim {
            for v in 0..dim {
                instances += 1;
                let lhs = b.mul_vec(&eta_col(u), &eta_col(v)).expect("degree zero");
                let rhs = SparseVec::from_dense(&b.eta().apply(&ae.mul_basis(u, v)));
                if lhs != rhs {
                    failure = Some(format!("eta(u)eta(v) != eta(uv) at ({u},{v})"));
                    break 'outer;
                }
            }
        }
    }
    ctx.record("eta-morphism", instances, failure);
}

fn st_commute(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let mut failure = None;
    'outer: for a in 0..n {
        for c in 0..n {
            let s = b.s_vector(a);
            let t = b.t_vector(c);
            let st = b.mul_vec(&s, &t).expect("degree zero");
            let ts = b.mul_vec(&t, &s).expect("degree zero");
            if st != ts {
                failure = Some(format!("s(e{a}) t(e{c}°) != t(e{c}°) s(e{a})"));
                break 'outer;
            }
        }
    }
    ctx.record("st-commute", n * n, failure);
}

/// `Delta(s(a) t(b°) xi) = s(a) xi_(1) (x) t(b°) xi_(2)` as maps.
fn delta_bilinear(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let t2bim = match b.tensor2().as_bimodule() {
        Ok(m) => m,
        Err(e) => {
            ctx.record("delta-bilinear", 0, Some(format!("induced actions ill-defined: {e}")));
            return;
        }
    };
    let mut failure = None;
    'outer: for a in 0..n {
        for c in 0..n {
            let act_b = b.bimodule().s_act()[a].compose(&b.bimodule().t_act()[c]);
            let act_t2 = t2bim.s_act()[a].compose(&t2bim.t_act()[c]);
            let lhs = b.delta().compose(&act_b);
            let rhs = act_t2.compose(b.delta());
            if lhs != rhs {
                failure = Some(format!("A^e-linearity of Delta fails at (e{a}, e{c}°)"));
                break 'outer;
            }
        }
    }
    ctx.record("delta-bilinear", n * n, failure);
}

fn delta_source_target(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let one = b.unit_sparse();
    let mut src_failure = None;
    let mut tgt_failure = None;
    for a in 0..n {
        let s = b.s_vector(a);
        let t = b.t_vector(a);
        if b.delta_of(&s) != b.class_of_tensor(&s, &one) && src_failure.is_none() {
            src_failure = Some(format!("Delta(s(e{a})) != s(e{a}) (x) 1"));
        }
        if b.delta_of(&t) != b.class_of_tensor(&one, &t) && tgt_failure.is_none() {
            tgt_failure = Some(format!("Delta(t(e{a}°)) != 1 (x) t(e{a}°)"));
        }
    }
    ctx.record("delta-source", n, src_failure);
    ctx.record("delta-target", n, tgt_failure);
}

fn delta_unit(ctx: &mut Ctx) {
    let b = ctx.b;
    let one = b.unit_sparse();
    let failure = (b.delta_of(&one) != b.class_of_tensor(&one, &one))
        .then(|| String::from("Delta(1) != 1 (x) 1"));
    ctx.record("delta-unit", 1, failure);
}

fn counit_bilinear(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let mut failure = None;
    let mut instances = 0;
    'outer: for a in 0..n {
        for c in 0..n {
            let st = b.mul_vec(&b.s_vector(a), &b.t_vector(c)).expect("degree zero");
            for p in 0..b.dim() {
                instances += 1;
                let lhs = b.counit_of(&b.mul_vec(&st, &SparseVec::unit(p)).expect("degree zero"));
                let eps_p = b.counit_of(&SparseVec::unit(p));
                let rhs = b.base().mul_vec(
                    &b.base().mul_vec(&exactlin::unit_vec(n, a), &eps_p),
                    &exactlin::unit_vec(n, c),
                );
                if lhs != rhs {
                    failure = Some(format!("eps(s(e{a})t(e{c}°) b{p}) != e{a} eps(b{p}) e{c}"));
                    break 'outer;
                }
            }
        }
    }
    ctx.record("counit-bilinear", instances, failure);
}

fn counit_st(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let mut failure = None;
    for a in 0..n {
        let ea = exactlin::unit_vec(n, a);
        if b.counit_of(&b.s_vector(a)) != ea || b.counit_of(&b.t_vector(a)) != ea {
            failure = Some(format!("eps(s(e{a})) or eps(t(e{a}°)) != e{a}"));
            break;
        }
    }
    ctx.record("counit-st", 2 * n, failure);
}

fn counit_unital(ctx: &mut Ctx) {
    let b = ctx.b;
    let failure = (b.counit_of(&b.unit_sparse()) != b.base().unit().to_vec())
        .then(|| String::from("eps(1_B) != 1_A"));
    ctx.record("counit-unital", 1, failure);
}

/// `(eps (x) id) . Delta = id = (id (x) eps) . Delta`, through the
/// identifications `A (x)_A B = B` (via `s`) and `B (x)_A A = B` (via `t`).
fn coring_counit_laws(ctx: &mut Ctx) {
    let b = ctx.b;
    let t2 = b.tensor2();
    let bdim = b.dim();
    let left_cols: Vec<SparseVec> = (0..t2.dim())
        .map(|z| {
            let mut out = SparseVec::new();
            for (idx, c) in t2.section(&SparseVec::unit(z)).iter() {
                let (p, q) = (idx / bdim, idx % bdim);
                let s = b.s_of(&b.counit_mat().col(p));
                let v = b.mul_vec(&s, &SparseVec::unit(q)).expect("degree zero");
                out.add_scaled(&v, c);
            }
            out
        })
        .collect();
    let right_cols: Vec<SparseVec> = (0..t2.dim())
        .map(|z| {
            let mut out = SparseVec::new();
            for (idx, c) in t2.section(&SparseVec::unit(z)).iter() {
                let (p, q) = (idx / bdim, idx % bdim);
                let t = b.t_of(&b.counit_mat().col(q));
                let v = b.mul_vec(&t, &SparseVec::unit(p)).expect("degree zero");
                out.add_scaled(&v, c);
            }
            out
        })
        .collect();
    let left = ColMap::new(bdim, left_cols).compose(b.delta());
    let right = ColMap::new(bdim, right_cols).compose(b.delta());
    let id = ColMap::identity(bdim);
    ctx.record(
        "coring-counit-left",
        bdim,
        (left != id).then(|| String::from("s(eps(xi_(1))) xi_(2) != xi")),
    );
    ctx.record(
        "coring-counit-right",
        bdim,
        (right != id).then(|| String::from("t(eps(xi_(2))°) xi_(1) != xi")),
    );
}

fn takeuchi_containment(ctx: &mut Ctx) {
    let b = ctx.b;
    match b.tensor2().takeuchi_subspace() {
        Err(e) => ctx.record("takeuchi-containment", 0, Some(format!("{e}"))),
        Ok(tak) => {
            let mut failure = None;
            let e = tak.echelon();
            for p in 0..b.dim() {
                if !e.contains(b.delta().col(p)) {
                    failure = Some(format!("Delta(b{p}) escapes the Takeuchi product"));
                    break;
                }
            }
            ctx.record("takeuchi-containment", b.dim(), failure);
        }
    }
}

/// The two nested coproducts `(Delta (x) id) Delta` and `(id (x) Delta) Delta`
/// expressed in the left-nested triple tensor `(B (x)_A B) (x)_A B`; the
/// right-nested route is re-associated through the canonical coordinates.
pub(super) fn coassociativity_maps(
    b: &GenBialgebroid,
) -> Result<(TensorOverA, ColMap, ColMap)> {
    let t2 = b.tensor2();
    let t2bim = t2.as_bimodule()?;
    let t3 = tensor_over_a(&t2bim, b.bimodule())?;
    let bdim = b.dim();
    // (Delta (x) id): T2 -> T3 on canonical representatives.
    let d1_cols: Vec<SparseVec> = (0..t2.dim())
        .map(|z| {
            let mut ambient = SparseVec::new();
            for (idx, c) in t2.section(&SparseVec::unit(z)).iter() {
                let (p, q) = (idx / bdim, idx % bdim);
                for (u, w) in b.delta().col(p).iter() {
                    ambient.add_scaled(&SparseVec::unit(u * bdim + q), &(c * w));
                }
            }
            t3.project(&ambient)
        })
        .collect();
    // (id (x) Delta): T2 -> T3, re-associating through proj2.
    let d2_cols: Vec<SparseVec> = (0..t2.dim())
        .map(|z| {
            let mut ambient = SparseVec::new();
            for (idx, c) in t2.section(&SparseVec::unit(z)).iter() {
                let (p, q) = (idx / bdim, idx % bdim);
                for (rs, w) in t2.section(b.delta().col(q)).iter() {
                    let (r, s) = (rs / bdim, rs % bdim);
                    let left_class = t2.class_of_basis_pair(p, r);
                    for (u, w2) in left_class.iter() {
                        ambient.add_scaled(&SparseVec::unit(u * bdim + s), &(c * w * w2));
                    }
                }
            }
            t3.project(&ambient)
        })
        .collect();
    let t3dim = t3.dim();
    Ok((t3, ColMap::new(t3dim, d1_cols), ColMap::new(t3dim, d2_cols)))
}

fn coring_coassociativity(ctx: &mut Ctx) {
    let b = ctx.b;
    match coassociativity_maps(b) {
        Err(e) => ctx.record("coring-coassociativity", 0, Some(format!("{e}"))),
        Ok((_, d1, d2)) => {
            let lhs = d1.compose(b.delta());
            let rhs = d2.compose(b.delta());
            let mut failure = None;
            for p in 0..b.dim() {
                if lhs.col(p) != rhs.col(p) {
                    failure = Some(format!("coassociativity fails on basis {p}"));
                    break;
                }
            }
            ctx.record("coring-coassociativity", b.dim(), failure);
        }
    }
}

/// Componentwise product of two tensor-square classes on their canonical
/// representatives.
pub(super) fn tensor_square_product(
    b: &GenBialgebroid,
    z1: &SparseVec,
    z2: &SparseVec,
) -> Result<SparseVec> {
    let t2 = b.tensor2();
    let bdim = b.dim();
    let r1 = t2.section(z1);
    let r2 = t2.section(z2);
    let mut ambient = SparseVec::new();
    for (idx1, c1) in r1.iter() {
        let (p1, q1) = (idx1 / bdim, idx1 % bdim);
        for (idx2, c2) in r2.iter() {
            let (p2, q2) = (idx2 / bdim, idx2 % bdim);
            let left = b.mul_basis(p1, p2)?;
            let right = b.mul_basis(q1, q2)?;
            for (lp, lc) in left.iter() {
                for (rp, rc) in right.iter() {
                    ambient.add_scaled(
                        &SparseVec::unit(lp * bdim + rp),
                        &(c1 * c2 * lc * rc),
                    );
                }
            }
        }
    }
    Ok(t2.project(&ambient))
}

fn delta_multiplicative(ctx: &mut Ctx) {
    let b = ctx.b;
    let mut failure = None;
    let mut instances = 0;
    'outer: for p in 0..b.dim() {
        for q in 0..b.dim() {
            if !b.product_defined(p, q) {
                continue;
            }
            instances += 1;
            let lhs = b.delta_of(b.mul_basis(p, q).expect("defined"));
            let rhs = match tensor_square_product(b, b.delta().col(p), b.delta().col(q)) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(format!("representative product failed at ({p},{q}): {e}"));
                    break 'outer;
                }
            };
            if lhs != rhs {
                failure = Some(format!("Delta(b{p} b{q}) != Delta(b{p}) Delta(b{q})"));
                break 'outer;
            }
        }
    }
    ctx.record("delta-multiplicative", instances, failure);
}

fn counit_character(ctx: &mut Ctx) {
    let b = ctx.b;
    let mut failure = None;
    let mut instances = 0;
    'outer: for p in 0..b.dim() {
        let xi = SparseVec::unit(p);
        for q in 0..b.dim() {
            if !b.product_defined(p, q) {
                continue;
            }
            instances += 1;
            let eps_q = b.counit_of(&SparseVec::unit(q));
            let middle = b.counit_of(&b.mul_vec(&xi, &SparseVec::unit(q)).expect("defined"));
            let via_s = b.counit_of(&b.mul_vec(&xi, &b.s_of(&eps_q)).expect("degree zero"));
            let via_t = b.counit_of(&b.mul_vec(&xi, &b.t_of(&eps_q)).expect("degree zero"));
            if via_s != middle || middle != via_t {
                failure = Some(format!("left character law fails at ({p},{q})"));
                break 'outer;
            }
        }
    }
    ctx.record("counit-character", instances, failure);
}

/// `Delta(xi s(a)) = xi_(1) s(a) (x) xi_(2)` and
/// `Delta(xi t(a°)) = xi_(1) (x) xi_(2) t(a°)`.
fn delta_right_mult(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let bdim = b.dim();
    let t2 = b.tensor2();
    let mut s_failure = None;
    let mut t_failure = None;
    for a in 0..n {
        let rs = b.bimodule().right().expect("right actions present").rs[a].clone();
        let rt = b.bimodule().right().expect("right actions present").rt[a].clone();
        for p in 0..bdim {
            let rep = t2.section(b.delta().col(p));
            // xi s(a) and xi t(a°)
            let xs = rs.apply(&SparseVec::unit(p));
            let xt = rt.apply(&SparseVec::unit(p));
            let mut amb_s = SparseVec::new();
            let mut amb_t = SparseVec::new();
            for (idx, c) in rep.iter() {
                let (x, y) = (idx / bdim, idx % bdim);
                for (r, w) in rs.col(x).iter() {
                    amb_s.add_scaled(&SparseVec::unit(r * bdim + y), &(c * w));
                }
                for (r, w) in rt.col(y).iter() {
                    amb_t.add_scaled(&SparseVec::unit(x * bdim + r), &(c * w));
                }
            }
            if s_failure.is_none() && b.delta_of(&xs) != t2.project(&amb_s) {
                s_failure = Some(format!("Delta(b{p} s(e{a})) mismatch"));
            }
            if t_failure.is_none() && b.delta_of(&xt) != t2.project(&amb_t) {
                t_failure = Some(format!("Delta(b{p} t(e{a}°)) mismatch"));
            }
        }
    }
    ctx.record("delta-right-source", n * bdim, s_failure);
    ctx.record("delta-right-target", n * bdim, t_failure);
}

fn counit_switch(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let mut failure = None;
    'outer: for p in 0..b.dim() {
        let xi = SparseVec::unit(p);
        for a in 0..n {
            let via_s = b.counit_of(&b.mul_vec(&xi, &b.s_vector(a)).expect("degree zero"));
            let via_t = b.counit_of(&b.mul_vec(&xi, &b.t_vector(a)).expect("degree zero"));
            if via_s != via_t {
                failure = Some(format!("eps(b{p} s(e{a})) != eps(b{p} t(e{a}°))"));
                break 'outer;
            }
        }
    }
    ctx.record("counit-switch", b.dim() * n, failure);
}

/// The base is a module algebra under the dot action:
/// `xi . (ab) = sum (xi_(1) . a)(xi_(2) . b)` and `xi . 1 = eps(xi)`.
fn module_algebra(ctx: &mut Ctx) {
    let b = ctx.b;
    let n = b.base().dim();
    let bdim = b.dim();
    let t2 = b.tensor2();
    let mut failure = None;
    'outer: for p in 0..bdim {
        let xi = SparseVec::unit(p);
        let one_act = b.dot_action(&xi, b.base().unit()).expect("degree zero");
        if one_act != b.counit_of(&xi) {
            failure = Some(format!("b{p} . 1_A != eps(b{p})"));
            break;
        }
        let rep = t2.section(b.delta().col(p));
        for a in 0..n {
            for c in 0..n {
                let ab = b.base().mul_basis(a, c);
                let lhs = b.dot_action(&xi, &ab).expect("degree zero");
                let mut rhs = exactlin::zero_vec(n);
                for (idx, w) in rep.iter() {
                    let (x, y) = (idx / bdim, idx % bdim);
                    let xa = b
                        .dot_action(&SparseVec::unit(x), &exactlin::unit_vec(n, a))
                        .expect("degree zero");
                    let yc = b
                        .dot_action(&SparseVec::unit(y), &exactlin::unit_vec(n, c))
                        .expect("degree zero");
                    exactlin::add_scaled(&mut rhs, &b.base().mul_vec(&xa, &yc), w);
                }
                if lhs != rhs {
                    failure = Some(format!("module-algebra law fails at (b{p}, e{a}, e{c})"));
                    break 'outer;
                }
            }
        }
    }
    ctx.record("module-algebra", bdim * n * n, failure);
}

