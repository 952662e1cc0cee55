//! Exact rational scalars and the linear-algebra kernel.
//!
//! All arithmetic is performed on arbitrary-precision rationals; results are
//! canonical (reduced fractions, echelon forms with a deterministic pivot
//! rule), so equality of subspaces and quotient data is plain structural
//! equality and identical inputs always produce bit-identical outputs.

mod colmap;
mod mat;
mod space;
mod sparse;

pub use colmap::{kernel_of_rows, ColMap};
pub use mat::Mat;
pub use space::{intersect, quotient_by, QuotientSpace, Subspace};
pub use sparse::{Echelon, SparseVec};

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational number: reduced fraction with positive denominator.
///
/// The canonical representation is maintained by `num-rational` itself, so
/// two scalars are equal iff their representations are identical.
pub type Scalar = num_rational::BigRational;

/// The scalar `n/1`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The scalar `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Dense zero vector.
pub fn zero_vec(len: usize) -> Vec<Scalar> {
    alloc::vec![Scalar::zero(); len]
}

/// Dense standard basis vector `e_i`.
pub fn unit_vec(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(len);
    v[i] = Scalar::one();
    v
}

/// `v += c * w` on dense vectors.
pub fn add_scaled(v: &mut [Scalar], w: &[Scalar], c: &Scalar) {
    debug_assert_eq!(v.len(), w.len());
    if c.is_zero() {
        return;
    }
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

/// Binomial coefficient as a scalar.
pub fn binomial(n: u32, k: u32) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Scalar::new(num, den)
}
