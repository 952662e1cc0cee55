//! The primitive filtration `F_0 = eta(A^e)`, `F_{n+1} = F_n + F_n . prim`.

use alloc::vec::Vec;

use crate::error::Result;
use crate::exactlin::{SparseVec, Subspace};
use crate::report::Report;

use super::{primitives, GenBialgebroid, Primitives};

/// The chain `F_0 <= F_1 <= ... <= F_d` together with exhaustion flags.
#[derive(Debug, Clone)]
pub struct FiltrationData {
    pub levels: Vec<Subspace>,
    /// `F_d = B`.
    pub exhaustive: bool,
    /// First `n` with `F_{n+1} = F_n` strictly below `B`, if the chain
    /// stalls; once it stalls it can never grow again.
    pub stabilized_at: Option<usize>,
}

impl FiltrationData {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Subspace {
        &self.levels[n]
    }
}

/// Computes the primitive filtration to depth `d`. Products that would leave
/// a truncated build raise `DegreeOverflow`; the computation stops
/// multiplying as soon as the chain stalls or exhausts, so a depth up to the
/// truncation is always safe.
pub fn primitive_filtration(b: &GenBialgebroid, d: u32) -> Result<FiltrationData> {
    let prim = primitives(b, None)?;
    primitive_filtration_with(b, &prim, d)
}

/// Same, reusing an already computed primitive space.
pub fn primitive_filtration_with(
    b: &GenBialgebroid,
    prim: &Primitives,
    d: u32,
) -> Result<FiltrationData> {
    let mut levels = Vec::with_capacity(d as usize + 1);
    let f0 = Subspace::from_sparse_rows(
        b.dim(),
        (0..b.eta().cols()).map(|u| SparseVec::from_dense(&b.eta().col(u))),
    );
    levels.push(f0);
    let mut stabilized_at = None;
    for n in 0..d as usize {
        let current = levels[n].clone();
        if stabilized_at.is_some() || current.dim() == b.dim() {
            levels.push(current);
            continue;
        }
        let mut products = Vec::new();
        for x in current.basis() {
            for p in prim.subspace.basis() {
                products.push(b.mul_vec(x, p)?);
            }
        }
        let next = current.sum(&Subspace::from_sparse_rows(b.dim(), products));
        if next.dim() == current.dim() && next.dim() < b.dim() {
            stabilized_at = Some(n);
        }
        levels.push(next);
    }
    let exhaustive = levels[d as usize].dim() == b.dim();
    Ok(FiltrationData { levels, exhaustive, stabilized_at })
}

/// Verifies `Delta(F_n) <= sum_{i+j=n} F_i (x)_A F_j` for every level.
pub fn check_delta_filtered(b: &GenBialgebroid, f: &FiltrationData) -> Report {
    let mut report = Report::new();
    for n in 0..f.levels.len() {
        let mut span_rows: Vec<SparseVec> = Vec::new();
        for i in 0..=n {
            let j = n - i;
            for x in f.levels[i].basis() {
                for y in f.levels[j].basis() {
                    span_rows.push(b.class_of_tensor(x, y));
                }
            }
        }
        let span = Subspace::from_sparse_rows(b.tensor2().dim(), span_rows);
        let e = span.echelon();
        for (k, x) in f.levels[n].basis().iter().enumerate() {
            if !e.contains(&b.delta_of(x)) {
                report.push(
                    "delta-filtered",
                    alloc::format!("Delta(F_{n} basis {k}) escapes sum F_i (x) F_j"),
                );
            }
        }
    }
    report
}
