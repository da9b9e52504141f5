//! Sparse vectors and an incremental row echelon form.
//!
//! Rows are stored with their leading index as pivot and the pivot entry
//! normalised to 1. Reduction only ever introduces larger indices, so a
//! single ascending sweep reduces a vector completely.

use std::collections::BTreeMap;

use super::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense<F: Field>(v: &SparseVec<F>, n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// `acc += s * v`, dropping cancelled entries.
pub fn sparse_axpy<F: Field>(acc: &mut SparseVec<F>, s: &F, v: &SparseVec<F>) {
    for (&i, c) in v {
        let t = s.mul_ref(c);
        match acc.get_mut(&i) {
            Some(x) => {
                *x = x.add_ref(&t);
                if x.is_zero() {
                    acc.remove(&i);
                }
            }
            None => {
                if !t.is_zero() {
                    acc.insert(i, t);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    /// Remainder of `v` after reduction by the stored rows.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(i, _)| self.rows.contains_key(i))
                .map(|(&i, c)| (i, c.clone()));
            let Some((i, c)) = next else { break };
            sparse_axpy(&mut v, &c.neg_ref(), &self.rows[&i]);
            cursor = i + 1;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row = r.into_iter().map(|(i, c)| (i, c.mul_ref(&inv))).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(sparse_from_dense(&[q(1), q(2), q(0)])));
        assert!(e.insert(sparse_from_dense(&[q(0), q(1), q(1)])));
        assert!(!e.insert(sparse_from_dense(&[q(2), q(5), q(1)])));
        assert!(e.insert(sparse_from_dense(&[q(1), q(1), q(0)])));
        assert_eq!(e.rank(), 3);
        assert!(!e.insert(SparseVec::new()));
    }
}
