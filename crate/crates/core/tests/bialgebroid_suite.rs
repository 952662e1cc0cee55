//! Cross-module behavior of the bialgebroid constructions: the axiom suite,
//! primitives, filtration, graded coring.

use bialgebroid::algebra::FinAlgebra;
use bialgebroid::anchored_lie::AnchoredLie;
use bialgebroid::cm_bialgebroid::{
    build_cm, check_bialgebroid, check_bialgebroid_level, check_delta_filtered,
    endomorphism_bialgebroid, enveloping_bialgebroid, freeness_certificates, graded_coring,
    prim_decomposition, primitive_filtration, primitives, st_ideal, CheckLevel, GenBialgebroid,
};
use bialgebroid::exactlin::{int, unit_vec, Mat, SparseVec, Subspace};

fn eps_derivation() -> Mat {
    Mat::from_i64(&[&[0, 0], &[0, 1]])
}

fn a2_line(n: u32) -> GenBialgebroid {
    let a = FinAlgebra::dual_numbers();
    let l = AnchoredLie::single_derivation(a.clone(), eps_derivation());
    build_cm(&a, &l, n).unwrap()
}

fn mat2_line(n: u32) -> GenBialgebroid {
    // L = span{E11} inside the commutator Lie algebra of Mat_2, inner anchor.
    let a = FinAlgebra::matrix_algebra(2);
    let d = bialgebroid::algebra::inner_derivation(&a, &unit_vec(4, 0));
    let l = AnchoredLie::single_derivation(a.clone(), d.0);
    build_cm(&a, &l, n).unwrap()
}

#[test]
fn axiom_suite_passes_on_dual_number_line_n2() {
    let b = a2_line(2);
    let suite = check_bialgebroid(&b);
    for r in &suite.results {
        assert!(r.passed(), "axiom {} failed: {:?}", r.axiom, r.failure);
    }
}

#[test]
fn axiom_suite_passes_on_enveloping_bialgebroid() {
    for a in [FinAlgebra::dual_numbers(), FinAlgebra::matrix_algebra(2)] {
        let b = enveloping_bialgebroid(&a).unwrap();
        let suite = check_bialgebroid(&b);
        for r in &suite.results {
            assert!(r.passed(), "axiom {} failed: {:?}", r.axiom, r.failure);
        }
    }
}

#[test]
fn axiom_suite_passes_on_endomorphism_bialgebroid() {
    let a = FinAlgebra::matrix_algebra(2);
    let b = endomorphism_bialgebroid(&a).unwrap();
    let suite = check_bialgebroid(&b);
    for r in &suite.results {
        assert!(r.passed(), "axiom {} failed: {:?}", r.axiom, r.failure);
    }
}

#[test]
fn quick_level_is_a_subset() {
    let b = a2_line(1);
    let quick = check_bialgebroid_level(&b, CheckLevel::Quick);
    let full = check_bialgebroid(&b);
    assert!(quick.results.len() < full.results.len());
    assert!(quick.all_passed());
    assert!(full.all_passed());
}

#[test]
fn primitives_of_enveloping_bialgebroid_are_s_minus_t() {
    let a = FinAlgebra::dual_numbers();
    let b = enveloping_bialgebroid(&a).unwrap();
    let p = primitives(&b, None).unwrap();
    assert_eq!(p.lie.ldim(), 1); // dim A - 1
    let st = st_ideal(&b);
    assert!(st.report.is_ok());
    assert_eq!(st.subspace, p.subspace);
}

#[test]
fn primitives_of_cm_line_have_expected_dimension() {
    let b = a2_line(2);
    let p = primitives(&b, None).unwrap();
    // ldim + dim A - 1 = 1 + 2 - 1 = 2
    assert_eq!(p.lie.ldim(), 2);
    assert!(p.lie.validate().is_ok());
}

#[test]
fn primitives_of_endomorphism_bialgebroid_are_derivations() {
    let a = FinAlgebra::matrix_algebra(2);
    let b = endomorphism_bialgebroid(&a).unwrap();
    let p = primitives(&b, None).unwrap();
    assert_eq!(p.lie.ldim(), 3);
    // and they coincide with <s - t> (all derivations of Mat_2 are inner)
    let st = st_ideal(&b);
    assert!(st.report.is_ok(), "{}", st.report);
    assert_eq!(st.subspace, p.subspace);
}

#[test]
fn st_ideal_bracket_and_anchor_formulas_hold_noncommutative() {
    let b = mat2_line(2);
    let st = st_ideal(&b);
    assert!(st.report.is_ok(), "{}", st.report);
    assert_eq!(st.subspace.dim(), 3); // dim A - dim{a : s(a)=t(a)} = 4 - 1
}

#[test]
fn prim_decomposition_splits_line_case() {
    let b = a2_line(2);
    let d = prim_decomposition(&b).unwrap();
    assert_eq!(d.decomposition.sub.ldim(), 1);
    assert_eq!(d.decomposition.ideal.ldim(), 1);
    assert_eq!(d.st_span.dim(), 1);
    assert_eq!(d.lie_span.dim(), 1);
}

#[test]
fn prim_decomposition_zero_lie() {
    let a = FinAlgebra::dual_numbers();
    let b = enveloping_bialgebroid(&a).unwrap();
    let d = prim_decomposition(&b).unwrap();
    assert_eq!(d.decomposition.sub.ldim(), 0);
    assert_eq!(d.decomposition.ideal.ldim(), 1);
}

#[test]
fn filtration_of_enveloping_bialgebroid_starts_full() {
    let a = FinAlgebra::dual_numbers();
    let b = enveloping_bialgebroid(&a).unwrap();
    let f = primitive_filtration(&b, 0).unwrap();
    assert!(f.exhaustive);
    assert_eq!(f.level(0).dim(), 4);
}

#[test]
fn filtration_of_cm_line_matches_degree_slices() {
    let b = a2_line(2);
    let f = primitive_filtration(&b, 2).unwrap();
    assert!(f.exhaustive);
    assert!(f.stabilized_at.is_none());
    // F_n = A (x) F_n(U) (x) A as subspaces of B
    for n in 0..=2u32 {
        let expected = Subspace::from_sparse_rows(
            b.dim(),
            (0..b.dim())
                .filter(|p| b.basis_degree(*p) <= n)
                .map(SparseVec::unit),
        );
        assert_eq!(f.level(n as usize), &expected, "level {n}");
    }
}

#[test]
fn filtration_of_endomorphism_bialgebroid_is_exhausted_immediately() {
    let a = FinAlgebra::matrix_algebra(2);
    let b = endomorphism_bialgebroid(&a).unwrap();
    let f = primitive_filtration(&b, 1).unwrap();
    assert!(f.exhaustive);
    assert_eq!(f.level(0).dim(), 16); // eta surjective
    assert_eq!(f.level(1).dim(), 16);
}

#[test]
fn delta_is_filtered_on_cm_build() {
    let b = a2_line(2);
    let f = primitive_filtration(&b, 2).unwrap();
    let r = check_delta_filtered(&b, &f);
    assert!(r.is_ok(), "{r}");
}

#[test]
fn graded_coring_of_cm_line() {
    let b = a2_line(2);
    let f = primitive_filtration(&b, 2).unwrap();
    let certs = freeness_certificates(&b, &f);
    assert!(certs.iter().all(|c| c.is_free()));
    let g = graded_coring(&b, &f).unwrap();
    // gr_n = A (x) gr_n(U) (x) A: dims 4, 4, 4
    assert_eq!(g.gr_dims, vec![4, 4, 4]);
    assert!(g.comonoid_report.is_ok(), "{}", g.comonoid_report);
    assert!(g.strongly_graded_up_to(2));
}

#[test]
fn graded_coring_of_mat2_line() {
    let b = mat2_line(2);
    let f = primitive_filtration(&b, 2).unwrap();
    let g = graded_coring(&b, &f).unwrap();
    assert_eq!(g.gr_dims, vec![16, 16, 16]);
    assert!(g.comonoid_report.is_ok(), "{}", g.comonoid_report);
    assert!(g.strongly_graded_up_to(2));
}

#[test]
fn tampered_counit_is_reported_at_the_character_law() {
    // Scale the counit: eps' = 2 eps breaks eps(1) = 1 and the character law.
    let a = FinAlgebra::dual_numbers();
    let good = enveloping_bialgebroid(&a).unwrap();
    let mut counit = good.counit_mat().clone();
    counit = &counit * &int(2);
    let mult: Vec<Vec<Option<SparseVec>>> = (0..good.dim())
        .map(|p| (0..good.dim()).map(|q| Some(good.mul_basis(p, q).unwrap().clone())).collect())
        .collect();
    let delta_ambient: Vec<SparseVec> = (0..good.dim())
        .map(|p| good.tensor2().section(good.delta().col(p)))
        .collect();
    let bad = GenBialgebroid::from_parts(
        a,
        mult,
        good.unit().to_vec(),
        good.eta().clone(),
        counit,
        &delta_ambient,
        None,
        None,
    )
    .unwrap();
    let suite = check_bialgebroid(&bad);
    assert!(!suite.all_passed());
    let failed: Vec<&str> = suite.failures().map(|r| r.axiom.as_str()).collect();
    assert!(failed.contains(&"counit-unital"));
    assert!(failed.contains(&"counit-character") || failed.contains(&"coring-counit-left"));
}

#[test]
fn axiom_suite_passes_on_mat2_line_n2() {
    let b = mat2_line(2);
    let suite = check_bialgebroid(&b);
    for r in &suite.results {
        assert!(r.passed(), "axiom {} failed: {:?}", r.axiom, r.failure);
    }
}
