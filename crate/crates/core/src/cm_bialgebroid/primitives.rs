//! Primitive elements of a bialgebroid, the span of `s - t`, and the
//! semi-direct decomposition of the primitives of a Connes-Moscovici build.

use alloc::format;
use alloc::vec::Vec;

use crate::anchored_lie::{decompose_semidirect, AnchoredLie, SemidirectDecomposition};
use crate::error::{Error, Result};
use crate::exactlin::{self, ColMap, Mat, Scalar, SparseVec, Subspace};
use crate::report::Report;

use super::GenBialgebroid;

/// The anchored Lie algebra of primitive elements, together with its
/// embedding into the bialgebroid.
#[derive(Debug, Clone)]
pub struct Primitives {
    /// Bracket and anchor on the primitive basis.
    pub lie: AnchoredLie,
    /// `bdim x pdim`; column `k` is the `k`-th primitive basis vector.
    pub embedding: Mat,
    /// The span inside `B`, in canonical echelon form (its rows are the
    /// primitive basis).
    pub subspace: Subspace,
    /// Counit values of the primitive basis. The defining condition is the
    /// coproduct condition alone; these are exposed for inspection.
    pub counit_values: Vec<Vec<Scalar>>,
}

/// The default search window for a truncated build: all of `B` for total
/// bialgebroids, the degree-`N-1` part for a Connes-Moscovici build with
/// `N >= 1`.
///
/// Top-degree elements are excluded there because the commutator of two of
/// them cannot be formed inside the truncation, so the Lie structure of the
/// answer could not be verified.
pub fn primitive_window(b: &GenBialgebroid) -> Subspace {
    match (b.degrees(), b.truncation()) {
        (Some(degs), Some(n)) if n >= 1 => Subspace::from_sparse_rows(
            b.dim(),
            degs.iter()
                .enumerate()
                .filter(|(_, d)| **d <= n - 1)
                .map(|(p, _)| SparseVec::unit(p)),
        ),
        _ => Subspace::full(b.dim()),
    }
}

/// Echelon basis of `{xi in within : Delta(xi) = xi (x) 1 + 1 (x) xi}`, with
/// the commutator bracket (closure is checked, not assumed) and the dot
/// action as anchor.
pub fn primitives(b: &GenBialgebroid, within: Option<&Subspace>) -> Result<Primitives> {
    let window = match within {
        Some(w) => w.clone(),
        None => primitive_window(b),
    };
    assert_eq!(window.ambient_dim(), b.dim());

    let one = b.unit_sparse();
    // Condition map on the window coordinates.
    let cols: Vec<SparseVec> = window
        .basis()
        .iter()
        .map(|w| {
            let mut v = b.delta_of(w);
            let mut ins = b.class_of_tensor(w, &one);
            ins.add_scaled(&b.class_of_tensor(&one, w), &exactlin::one());
            v.add_scaled(&ins, &-exactlin::one());
            v
        })
        .collect();
    let kernel = ColMap::new(b.tensor2().dim(), cols).kernel();

    // Back to B coordinates, canonicalized.
    let vectors = kernel.basis().iter().map(|k| {
        let mut v = SparseVec::new();
        for (j, c) in k.iter() {
            v.add_scaled(&window.basis()[*j], c);
        }
        v
    });
    let subspace = Subspace::from_sparse_rows(b.dim(), vectors);
    let pdim = subspace.dim();

    let basis: Vec<SparseVec> = subspace.basis().to_vec();
    let mut brackets = alloc::vec![alloc::vec![exactlin::zero_vec(pdim); pdim]; pdim];
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let mut comm = b.mul_vec(x, y)?;
            comm.add_scaled(&b.mul_vec(y, x)?, &-exactlin::one());
            brackets[i][j] = subspace.coordinates(&comm).ok_or_else(|| Error::Precondition {
                context: "primitives",
                witness: format!("commutator of primitives {i}, {j} is not primitive"),
            })?;
        }
    }
    let anchor = basis
        .iter()
        .map(|x| b.dot_action_matrix(x))
        .collect::<Result<Vec<_>>>()?;
    let lie = AnchoredLie::new(b.base().clone(), pdim, brackets, anchor);

    let embedding = Mat::from_cols(
        &basis.iter().map(|v| v.to_dense(b.dim())).collect::<Vec<_>>(),
    );
    let counit_values = basis.iter().map(|v| b.counit_of(v)).collect();

    Ok(Primitives { lie, embedding, subspace, counit_values })
}

/// The span of `{s(a) - t(a°)}` with its verification report.
#[derive(Debug, Clone)]
pub struct StIdeal {
    pub subspace: Subspace,
    /// Findings for the primitivity of each generator, the bracket formula
    /// `[s(a)-t(a°), s(b)-t(b°)] = s([a,b]) - t([a,b]°)` and the anchor
    /// formula `(s(a)-t(a°)) . b = [a,b]`.
    pub report: Report,
}

pub fn st_ideal(b: &GenBialgebroid) -> StIdeal {
    let n = b.base().dim();
    let one = b.unit_sparse();
    let mut report = Report::new();
    let gen = |a: usize| -> SparseVec {
        let mut v = b.s_vector(a);
        v.add_scaled(&b.t_vector(a), &-exactlin::one());
        v
    };
    let vectors: Vec<SparseVec> = (0..n).map(gen).collect();
    let subspace = Subspace::from_sparse_rows(b.dim(), vectors.iter().cloned());

    for (a, v) in vectors.iter().enumerate() {
        let mut lhs = b.delta_of(v);
        let mut ins = b.class_of_tensor(v, &one);
        ins.add_scaled(&b.class_of_tensor(&one, v), &exactlin::one());
        lhs.add_scaled(&ins, &-exactlin::one());
        if !lhs.is_zero() {
            report.push("st-primitive", format!("s(e{a}) - t(e{a}°) is not primitive"));
        }
    }
    let st_echelon = subspace.echelon();
    for a in 0..n {
        for c in 0..n {
            let x = &vectors[a];
            let y = &vectors[c];
            let comm = (|| -> Result<SparseVec> {
                let mut v = b.mul_vec(x, y)?;
                v.add_scaled(&b.mul_vec(y, x)?, &-exactlin::one());
                Ok(v)
            })();
            match comm {
                Err(e) => report.push("st-bracket", format!("product failed: {e}")),
                Ok(comm) => {
                    // s([a,b]) - t([a,b]°)
                    let ab = b.base().commutator(
                        &exactlin::unit_vec(n, a),
                        &exactlin::unit_vec(n, c),
                    );
                    let mut expected = b.s_of(&ab);
                    expected.add_scaled(&b.t_of(&ab), &-exactlin::one());
                    expected.add_scaled(&comm, &-exactlin::one());
                    if !expected.is_zero() {
                        report.push(
                            "st-bracket",
                            format!("[s-t](e{a}), [s-t](e{c}) bracket formula fails"),
                        );
                    }
                    if !st_echelon.contains(&comm) {
                        report.push(
                            "st-ideal-closure",
                            format!("bracket at (e{a}, e{c}) escapes the span"),
                        );
                    }
                }
            }
        }
    }
    for (a, v) in vectors.iter().enumerate() {
        match b.dot_action_matrix(v) {
            Err(e) => report.push("st-anchor", format!("dot action failed: {e}")),
            Ok(m) => {
                let ad = &b.base().left_mult(&exactlin::unit_vec(n, a))
                    - &b.base().right_mult(&exactlin::unit_vec(n, a));
                if m != ad {
                    report.push("st-anchor", format!("anchor of s(e{a}) - t(e{a}°) is not [e{a},-]"));
                }
            }
        }
    }
    StIdeal { subspace, report }
}

/// Decomposition of the primitives of a Connes-Moscovici build along
/// `1 (x) L (x) 1` and the span of `s - t`.
#[derive(Debug, Clone)]
pub struct PrimDecomposition {
    pub primitives: Primitives,
    /// Span of `s(a) - t(a°)` in `B`.
    pub st_span: Subspace,
    /// Span of `1 (x) x_r (x) 1` in `B`.
    pub lie_span: Subspace,
    /// The semi-direct decomposition, in primitive-basis coordinates.
    pub decomposition: SemidirectDecomposition,
}

pub fn prim_decomposition(b: &GenBialgebroid) -> Result<PrimDecomposition> {
    let env = b.envelope().ok_or(Error::Precondition {
        context: "prim_decomposition",
        witness: alloc::string::String::from("not a Connes-Moscovici build"),
    })?;
    let prim = primitives(b, None)?;
    let st = st_ideal(b);
    let ldim = env.lie().ldim();
    let lie_span =
        Subspace::from_sparse_rows(b.dim(), (0..ldim).map(|r| b.jl_vector(r)));

    let to_prim_coords = |span: &Subspace, name: &'static str| -> Result<Subspace> {
        let rows = span
            .basis()
            .iter()
            .map(|v| {
                prim.subspace
                    .coordinates(v)
                    .map(|c| SparseVec::from_dense(&c))
                    .ok_or(Error::Precondition {
                        context: "prim_decomposition",
                        witness: format!("{name} span is not contained in the primitives"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_sparse_rows(prim.subspace.dim(), rows))
    };
    let st_coords = to_prim_coords(&st.subspace, "s-t")?;
    let lie_coords = to_prim_coords(&lie_span, "1 (x) L (x) 1")?;

    let decomposition =
        decompose_semidirect(&prim.lie, &st_coords, &lie_coords).map_err(|f| {
            Error::Precondition {
                context: "prim_decomposition",
                witness: format!("{f}"),
            }
        })?;

    Ok(PrimDecomposition { primitives: prim, st_span: st.subspace, lie_span, decomposition })
}
