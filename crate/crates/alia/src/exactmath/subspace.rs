//! Linear subspaces of coordinate spaces, stored in reduced echelon form.

use super::field::Field;
use super::matrix::ExactMatrix;

/// A subspace of `F^n` with a canonical (reduced row echelon) basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| super::matrix::unit_vec(ambient_dim, i))
            .collect();
        Subspace {
            ambient_dim,
            basis: rows,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = ExactMatrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient_dim, "vector length");
        let r = m.rref();
        Subspace {
            ambient_dim,
            basis: r.reduced.to_rows(),
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis (reduced row echelon rows).
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![F::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            super::matrix::axpy(&mut rebuilt, c, b);
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Self) -> bool {
        o.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, o: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(o.basis.iter().cloned());
        Self::span(self.ambient_dim, &all)
    }

    /// Intersection via the kernel of `[B₁ᵀ | -B₂ᵀ]`.
    pub fn intersect(&self, o: &Self) -> Self {
        if self.dim() == 0 || o.dim() == 0 {
            return Self::zero(self.ambient_dim);
        }
        let a = ExactMatrix::from_columns(&self.basis, self.ambient_dim);
        let b = ExactMatrix::from_columns(&o.basis, self.ambient_dim);
        let k = a.hstack(&b.scale(&F::one().neg_ref())).kernel_basis();
        let vecs: Vec<Vec<F>> = k.iter().map(|coef| a.mul_vec(&coef[..self.dim()])).collect();
        Self::span(self.ambient_dim, &vecs)
    }

    /// Image under a linear map given as a matrix acting on columns.
    pub fn image(&self, m: &ExactMatrix<F>) -> Self {
        let vecs: Vec<Vec<F>> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Self::span(m.rows(), &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_i64(x)).collect()
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 5, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 7, 9]);
        let c = a.coordinates(&x).unwrap();
        assert_eq!(c.len(), 2);
        assert!(a.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
