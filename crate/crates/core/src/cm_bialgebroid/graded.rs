//! The associated graded coring of the primitive filtration.
//!
//! Projectivity of the graded pieces over `A^e` is certified through
//! freeness: a deterministic greedy search extends an `eta(A^e)`-basis block
//! by block. Freeness implies projectivity; failure of the search is
//! reported as inconclusive, never as a refutation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bimodule_tensor::{tensor_over_a, EtaBimodule, TensorOverA};
use crate::error::{Error, Result};
use crate::exactlin::{self, ColMap, Mat, SparseVec, Subspace};
use crate::report::Report;

use super::{check_delta_filtered, FiltrationData, GenBialgebroid};

/// Outcome of the per-level freeness search.
#[derive(Debug, Clone)]
pub enum FreenessCert {
    /// `F_n = F_{n-1} (+) eta(A^e) g_1 (+) ... (+) eta(A^e) g_r` with every
    /// block free of rank one.
    Free { generators: Vec<SparseVec> },
    Inconclusive { reason: String },
}

impl FreenessCert {
    pub fn is_free(&self) -> bool {
        matches!(self, FreenessCert::Free { .. })
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Left multiplication by every `eta(A^e)` basis image.
fn eta_mult_maps(b: &GenBialgebroid) -> Vec<ColMap> {
    (0..b.eta().cols())
        .map(|u| {
            b.left_mult_map(&SparseVec::from_dense(&b.eta().col(u)))
                .expect("eta images have degree zero")
        })
        .collect()
}

/// Tries to certify that each `gr_n = F_n / F_{n-1}` is a free
/// `eta(A^e)`-module, returning one certificate per level.
pub fn freeness_certificates(b: &GenBialgebroid, f: &FiltrationData) -> Vec<FreenessCert> {
    let e_maps = eta_mult_maps(b);
    let block = e_maps.len();
    let mut certs = Vec::with_capacity(f.levels.len());
    for n in 0..f.levels.len() {
        let target = &f.levels[n];
        let floor_dim = if n == 0 { 0 } else { f.levels[n - 1].dim() };
        let quotient_dim = target.dim() - floor_dim;
        if quotient_dim == 0 {
            certs.push(FreenessCert::Free { generators: Vec::new() });
            continue;
        }
        if quotient_dim % block != 0 {
            certs.push(FreenessCert::Inconclusive {
                reason: format!(
                    "level {n}: quotient dimension {quotient_dim} is not a multiple of {block}"
                ),
            });
            continue;
        }
        let mut span = if n == 0 {
            crate::exactlin::Echelon::new(b.dim())
        } else {
            f.levels[n - 1].echelon()
        };
        let mut generators = Vec::new();
        let mut inconclusive = None;
        while span.rank() < target.dim() {
            // Deterministic candidate pool: echelon basis vectors outside the
            // current span first, then pseudorandom combinations of them.
            let complement: Vec<&SparseVec> =
                target.basis().iter().filter(|v| !span.contains(v)).collect();
            let mut accepted = None;
            let try_candidate = |g: &SparseVec,
                                     span: &crate::exactlin::Echelon|
             -> Option<crate::exactlin::Echelon> {
                let mut trial = span.clone();
                let mut added = 0usize;
                for m in &e_maps {
                    if trial.insert(m.apply(g)) {
                        added += 1;
                    }
                }
                (added == block).then_some(trial)
            };
            for g in &complement {
                if let Some(trial) = try_candidate(g, &span) {
                    accepted = Some(((*g).clone(), trial));
                    break;
                }
            }
            if accepted.is_none() {
                let mut seed = 0x5eed0000 + n as u64;
                for _ in 0..3 {
                    let g = complement.iter().fold(SparseVec::new(), |mut acc, v| {
                        let w = (splitmix(&mut seed) % 997 + 1) as i64;
                        acc.add_scaled(v, &exactlin::int(w));
                        acc
                    });
                    if let Some(trial) = try_candidate(&g, &span) {
                        accepted = Some((g, trial));
                        break;
                    }
                }
            }
            match accepted {
                Some((g, trial)) => {
                    generators.push(g);
                    span = trial;
                }
                None => {
                    inconclusive = Some(FreenessCert::Inconclusive {
                        reason: format!("level {n}: no free generator found"),
                    });
                    break;
                }
            }
        }
        certs.push(inconclusive.unwrap_or(FreenessCert::Free { generators }));
    }
    certs
}

/// The graded coring data: lifted components, component maps of the
/// comultiplication, counit component, and the verification report.
#[derive(Debug, Clone)]
pub struct GradedCoring {
    pub gr_dims: Vec<usize>,
    /// Chosen `eta(A^e)`-stable lifts `C_n` with `F_n = F_{n-1} (+) C_n`.
    pub lifts: Vec<Subspace>,
    pub certificates: Vec<FreenessCert>,
    /// `Delta^{[h,k]} : gr_{h+k} -> gr_h (x)_A gr_k` in lift coordinates.
    pub delta_components: BTreeMap<(u32, u32), ColMap>,
    /// The tensor space each component maps into.
    pub component_tensors: BTreeMap<(u32, u32), TensorOverA>,
    /// Injectivity of each component map.
    pub injectivity: BTreeMap<(u32, u32), bool>,
    /// Counit restricted to `gr_0`.
    pub counit_component: Mat,
    /// Counit-law, vanishing and coassociativity findings on the graded
    /// object; empty iff the graded comonoid laws all hold.
    pub comonoid_report: Report,
}

impl GradedCoring {
    /// Are all component maps with `h + k <= d` injective?
    pub fn strongly_graded_up_to(&self, d: u32) -> bool {
        self.injectivity
            .iter()
            .filter(|((h, k), _)| h + k <= d)
            .all(|(_, inj)| *inj)
    }
}

/// Builds the graded coring of an exhaustive, delta-compatible primitive
/// filtration whose pieces certify as free.
pub fn graded_coring(b: &GenBialgebroid, f: &FiltrationData) -> Result<GradedCoring> {
    if !f.exhaustive {
        return Err(Error::Precondition {
            context: "graded_coring",
            witness: String::from("filtration does not exhaust the bialgebroid at this depth"),
        });
    }
    let filt_report = check_delta_filtered(b, f);
    if !filt_report.is_ok() {
        return Err(Error::Precondition {
            context: "graded_coring",
            witness: format!("comultiplication is not filtered: {filt_report}"),
        });
    }
    let certificates = freeness_certificates(b, f);
    if let Some((n, FreenessCert::Inconclusive { reason })) =
        certificates.iter().enumerate().find(|(_, c)| !c.is_free())
    {
        let _ = n;
        return Err(Error::Precondition {
            context: "graded_coring",
            witness: format!("freeness certificate missing: {reason}"),
        });
    }

    let e_maps = eta_mult_maps(b);
    let depth = f.levels.len() - 1;

    // eta(A^e)-stable lifts C_n spanned by the certified blocks.
    let mut lifts: Vec<Subspace> = Vec::with_capacity(depth + 1);
    for cert in &certificates {
        let FreenessCert::Free { generators } = cert else { unreachable!() };
        let rows = generators.iter().flat_map(|g| e_maps.iter().map(move |m| m.apply(g)));
        lifts.push(Subspace::from_sparse_rows(b.dim(), rows));
    }
    let gr_dims: Vec<usize> = lifts.iter().map(Subspace::dim).collect();

    // Global change of basis: B = C_0 (+) ... (+) C_d.
    let mut cols: Vec<Vec<_>> = Vec::with_capacity(b.dim());
    for c in &lifts {
        cols.extend(c.basis_dense());
    }
    assert_eq!(cols.len(), b.dim(), "lifts must decompose the whole space");
    let p = Mat::from_cols(&cols);
    let pinv = p.inverse().ok_or(Error::Precondition {
        context: "graded_coring",
        witness: String::from("lift blocks are not independent"),
    })?;
    let mut offsets = Vec::with_capacity(depth + 2);
    offsets.push(0usize);
    for d in &gr_dims {
        offsets.push(offsets.last().unwrap() + d);
    }
    // pi_n : B -> C_n coordinates.
    let pi: Vec<ColMap> = (0..=depth)
        .map(|n| {
            let rows = gr_dims[n];
            let cols = (0..b.dim())
                .map(|j| {
                    SparseVec::from_terms((0..rows).map(|r| {
                        (r, pinv[(offsets[n] + r, j)].clone())
                    }))
                })
                .collect();
            ColMap::new(rows, cols)
        })
        .collect();
    let incl = |n: usize, k: usize| -> SparseVec { lifts[n].basis()[k].clone() };

    // gr_n as an eta-bimodule on lift coordinates.
    let mut report = Report::new();
    let mut gr_bims: Vec<EtaBimodule> = Vec::with_capacity(depth + 1);
    for n in 0..=depth {
        let adim = b.base().dim();
        let mut s_maps = Vec::with_capacity(adim);
        let mut t_maps = Vec::with_capacity(adim);
        for a in 0..adim {
            let make = |family: &ColMap| -> ColMap {
                let cols = (0..gr_dims[n])
                    .map(|k| {
                        let img = family.apply(&incl(n, k));
                        if !lifts[n].contains(&img) {
                            // stability is forced by the block construction;
                            // a violation means the lift data is corrupt
                            panic!("lift C_{n} is not stable under the eta action");
                        }
                        pi[n].apply(&img)
                    })
                    .collect();
                ColMap::new(gr_dims[n], cols)
            };
            s_maps.push(make(&b.bimodule().s_act()[a]));
            t_maps.push(make(&b.bimodule().t_act()[a]));
        }
        gr_bims.push(EtaBimodule::new(b.base().clone(), gr_dims[n], s_maps, t_maps, None));
    }

    // Counit components.
    let counit_component = {
        let mut m = Mat::zero(b.base().dim(), gr_dims[0]);
        for k in 0..gr_dims[0] {
            m.set_col(k, &b.counit_of(&incl(0, k)));
        }
        m
    };
    for n in 1..=depth {
        for k in 0..gr_dims[n] {
            if b.counit_of(&incl(n, k)).iter().any(|c| !num_traits::Zero::is_zero(c)) {
                report.push("graded-counit-vanishing", format!("eps(gr_{n} basis {k}) != 0"));
            }
        }
    }

    // Component tensors and component maps.
    let mut component_tensors = BTreeMap::new();
    let mut delta_components = BTreeMap::new();
    let mut injectivity = BTreeMap::new();
    for n in 0..=depth as u32 {
        for h in 0..=n {
            let k = n - h;
            let g = tensor_over_a(&gr_bims[h as usize], &gr_bims[k as usize])?;
            let cols: Vec<SparseVec> = (0..gr_dims[n as usize])
                .map(|idx| {
                    let dv = b.delta_of(&incl(n as usize, idx));
                    let rep = b.tensor2().section(&dv);
                    let mut ambient = SparseVec::new();
                    let ck_dim = gr_dims[k as usize];
                    for (pq, c) in rep.iter() {
                        let (x, y) = (pq / b.dim(), pq % b.dim());
                        let xh = pi[h as usize].apply(&SparseVec::unit(x));
                        let yk = pi[k as usize].apply(&SparseVec::unit(y));
                        for (r1, w1) in xh.iter() {
                            for (r2, w2) in yk.iter() {
                                ambient.add_scaled(
                                    &SparseVec::unit(r1 * ck_dim + r2),
                                    &(c * w1 * w2),
                                );
                            }
                        }
                    }
                    g.project(&ambient)
                })
                .collect();
            let map = ColMap::new(g.dim(), cols);
            injectivity.insert((h, k), map.rank() == gr_dims[n as usize]);
            delta_components.insert((h, k), map);
            component_tensors.insert((h, k), g);
        }
    }

    // Graded counit laws: (eps (x) id) Delta^{[0,n]} = id = (id (x) eps) Delta^{[n,0]}.
    for n in 0..=depth as u32 {
        let nn = n as usize;
        let left = {
            let g = &component_tensors[&(0, n)];
            let gr0 = gr_dims[0];
            let cols: Vec<SparseVec> = (0..g.dim())
                .map(|z| {
                    let mut out = SparseVec::new();
                    for (idx, c) in g.section(&SparseVec::unit(z)).iter() {
                        let (x, y) = (idx / gr_dims[nn], idx % gr_dims[nn]);
                        let _ = gr0;
                        let eps = counit_component.col(x);
                        let v = gr_bims[nn].s_of(&eps).apply(&SparseVec::unit(y));
                        out.add_scaled(&v, c);
                    }
                    out
                })
                .collect();
            ColMap::new(gr_dims[nn], cols).compose(&delta_components[&(0, n)])
        };
        if left != ColMap::identity(gr_dims[nn]) {
            report.push("graded-counit-left", format!("fails on gr_{n}"));
        }
        let right = {
            let g = &component_tensors[&(n, 0)];
            let cols: Vec<SparseVec> = (0..g.dim())
                .map(|z| {
                    let mut out = SparseVec::new();
                    for (idx, c) in g.section(&SparseVec::unit(z)).iter() {
                        let (x, y) = (idx / gr_dims[0], idx % gr_dims[0]);
                        let eps = counit_component.col(y);
                        let v = gr_bims[nn].t_of(&eps).apply(&SparseVec::unit(x));
                        out.add_scaled(&v, c);
                    }
                    out
                })
                .collect();
            ColMap::new(gr_dims[nn], cols).compose(&delta_components[&(n, 0)])
        };
        if right != ColMap::identity(gr_dims[nn]) {
            report.push("graded-counit-right", format!("fails on gr_{n}"));
        }
    }

    // Graded coassociativity, componentwise.
    for n in 0..=depth as u32 {
        for h in 0..=n {
            for k in 0..=(n - h) {
                let l = n - h - k;
                let ghk = &component_tensors[&(h, k)];
                let gkl = &component_tensors[&(k, l)];
                let t3 = tensor_over_a(&ghk.as_bimodule()?, &gr_bims[l as usize])?;
                let cl = gr_dims[l as usize];
                let ck = gr_dims[k as usize];
                let route1 = {
                    let outer = &delta_components[&(h + k, l)];
                    let inner = &delta_components[&(h, k)];
                    let g_out = &component_tensors[&(h + k, l)];
                    let cols: Vec<SparseVec> = (0..gr_dims[n as usize])
                        .map(|idx| {
                            let w = outer.col(idx);
                            let mut ambient = SparseVec::new();
                            for (xy, c) in g_out.section(w).iter() {
                                let (x, y) = (xy / cl, xy % cl);
                                for (u, w2) in inner.col(x).iter() {
                                    ambient.add_scaled(
                                        &SparseVec::unit(u * cl + y),
                                        &(c * w2),
                                    );
                                }
                            }
                            t3.project(&ambient)
                        })
                        .collect();
                    ColMap::new(t3.dim(), cols)
                };
                let route2 = {
                    let outer = &delta_components[&(h, k + l)];
                    let inner = &delta_components[&(k, l)];
                    let g_out = &component_tensors[&(h, k + l)];
                    let ckl = gr_dims[(k + l) as usize];
                    let cols: Vec<SparseVec> = (0..gr_dims[n as usize])
                        .map(|idx| {
                            let w = outer.col(idx);
                            let mut ambient = SparseVec::new();
                            for (xy, c) in g_out.section(w).iter() {
                                let (x, y) = (xy / ckl, xy % ckl);
                                for (rs, w2) in gkl.section(inner.col(y)).iter() {
                                    let (r, s) = (rs / cl, rs % cl);
                                    let cls = ghk.class_of_basis_pair(x, r);
                                    for (u, w3) in cls.iter() {
                                        ambient.add_scaled(
                                            &SparseVec::unit(u * cl + s),
                                            &(c * w2 * w3),
                                        );
                                    }
                                }
                            }
                            t3.project(&ambient)
                        })
                        .collect();
                    ColMap::new(t3.dim(), cols)
                };
                if route1 != route2 {
                    report.push(
                        "graded-coassociativity",
                        format!("fails at components ({h},{k},{l})"),
                    );
                }
                let _ = ck;
            }
        }
    }

    Ok(GradedCoring {
        gr_dims,
        lifts,
        certificates,
        delta_components,
        component_tensors,
        injectivity,
        counit_component,
        comonoid_report: report,
    })
}
