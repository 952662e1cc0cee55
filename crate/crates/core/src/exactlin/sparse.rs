//! Sparse vectors and an incremental echelon engine.
//!
//! Tensor-over-A quotients produce relation sets whose rows touch only a
//! handful of coordinates, so the big eliminations run on sparse rows; the
//! dense [`crate::exactlin::Mat`] front end delegates here.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::Zero;

use super::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: alloc::vec![(i, super::one())] }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: alloc::vec![(i, c)] }
        }
    }

    /// Builds from unordered (possibly repeated) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.entry(i) {
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
        SparseVec { entries: map.into_iter().collect() }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut v = super::zero_vec(len);
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= c;
        }
    }

    /// `self += c * other`, merging sorted entry lists.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Scalar) {
        if c.is_zero() || other.is_empty() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let mut x = a.next();
        let mut y = b.next();
        loop {
            match (x, y) {
                (None, None) => break,
                (Some((i, v)), None) => {
                    out.push((*i, v.clone()));
                    x = a.next();
                }
                (None, Some((j, w))) => {
                    out.push((*j, c * w));
                    y = b.next();
                }
                (Some((i, v)), Some((j, w))) => {
                    if i < j {
                        out.push((*i, v.clone()));
                        x = a.next();
                    } else if j < i {
                        out.push((*j, c * w));
                        y = b.next();
                    } else {
                        let s = v + c * w;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        x = a.next();
                        y = b.next();
                    }
                }
            }
        }
        self.entries = out;
    }

    /// Re-indexes every coordinate; the map must be strictly monotone on the
    /// support for the result to stay canonical.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_terms(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_terms(iter)
    }
}

/// Incrementally maintained row-echelon basis with monic pivots.
///
/// Rows are kept forward-reduced during insertion; [`Echelon::into_rref_rows`]
/// back-substitutes to the unique reduced form. Pivot choice is leftmost
/// nonzero, so the final reduced rows are canonical for the row space.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    /// pivot column -> row index
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows (forward elimination only).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut scan = 0usize;
        loop {
            let hit = v
                .entries
                .iter()
                .find(|(i, _)| *i >= scan && self.pivots.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match hit {
                None => break,
                Some((col, coeff)) => {
                    let row = &self.rows[self.pivots[&col]];
                    let neg = -coeff;
                    v.add_scaled(row, &neg);
                    scan = col;
                }
            }
        }
        v
    }

    /// Inserts `v` if it enlarges the row space; returns whether it did.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(col) => {
                let inv = {
                    let lead = r.get(col);
                    Scalar::new(lead.denom().clone(), lead.numer().clone())
                };
                r.scale(&inv);
                self.pivots.insert(col, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    /// Membership test for the row space.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_cols(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.ncols - self.pivots.len());
        let mut iter = self.pivots.keys().peekable();
        for c in 0..self.ncols {
            if iter.peek() == Some(&&c) {
                iter.next();
            } else {
                free.push(c);
            }
        }
        free
    }

    /// Finishes the elimination: returns the unique reduced rows ordered by
    /// pivot column.
    pub fn into_rref_rows(mut self) -> Vec<SparseVec> {
        let order: Vec<(usize, usize)> = self.pivots.iter().map(|(c, r)| (*c, *r)).collect();
        // Back-substitute from the rightmost pivot so each row sees fully
        // reduced later rows.
        for k in (0..order.len()).rev() {
            let (_, ri) = order[k];
            let mut row = core::mem::take(&mut self.rows[ri]);
            loop {
                let hit = row
                    .entries
                    .iter()
                    .skip(1)
                    .find(|(i, _)| self.pivots.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
                match hit {
                    None => break,
                    Some((col, coeff)) => {
                        let other = &self.rows[self.pivots[&col]];
                        let neg = -coeff;
                        row.add_scaled(other, &neg);
                    }
                }
            }
            self.rows[ri] = row;
        }
        order.into_iter().map(|(_, ri)| core::mem::take(&mut self.rows[ri])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, int};

    #[test]
    fn sparse_add_scaled_cancels() {
        let mut a = SparseVec::from_terms([(0, int(2)), (3, int(1))]);
        let b = SparseVec::from_terms([(0, int(1)), (2, int(5))]);
        a.add_scaled(&b, &int(-2));
        assert_eq!(a, SparseVec::from_terms([(2, int(-10)), (3, int(1))]));
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.insert(SparseVec::from_terms([(0, int(1)), (1, int(2))])));
        assert!(e.insert(SparseVec::from_terms([(1, int(1)), (2, int(1))])));
        // 2*(row1) - ... dependent combination
        assert!(!e.insert(SparseVec::from_terms([(0, int(2)), (1, int(6)), (2, int(2))])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_cols(), alloc::vec![2]);
    }

    #[test]
    fn rref_rows_are_reduced() {
        let mut e = Echelon::new(3);
        e.insert(SparseVec::from_terms([(0, int(2)), (1, int(4)), (2, int(2))]));
        e.insert(SparseVec::from_terms([(1, int(3)), (2, int(3))]));
        let rows = e.into_rref_rows();
        assert_eq!(rows[0], SparseVec::from_terms([(0, frac(1, 1)), (2, int(-1))]));
        assert_eq!(rows[1], SparseVec::from_terms([(1, int(1)), (2, int(1))]));
    }
}
