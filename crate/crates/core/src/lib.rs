//! Exact-arithmetic toolkit for Connes-Moscovici bialgebroids of anchored
//! Lie algebras.
//!
//! Everything is computed over the rationals with arbitrary precision: no
//! floating point appears anywhere, so every verified identity is an exact
//! statement about the constructed objects. The crate builds, at a bounded
//! PBW degree, the bialgebroid `A (x) F_N(U(L)) (x) A` of a finite-dimensional
//! algebra `A` acted on by an anchored Lie algebra `L`, checks the left
//! bialgebroid axioms by explicit linear algebra, computes primitive
//! elements, the primitive filtration and its associated graded coring, the
//! universal ring morphisms, and decides (at bounded degree) whether a given
//! bialgebroid is of this form.
//!
//! The crate is `no_std` (it requires `alloc`); IO, file formats and the
//! command line live in the companion `bialgebroid-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod anchored_lie;
pub mod bimodule_tensor;
pub mod cm_bialgebroid;
pub mod enveloping;
pub mod error;
pub mod exactlin;
pub mod report;
pub mod universal;

pub use error::Error;
pub use exactlin::Scalar;
