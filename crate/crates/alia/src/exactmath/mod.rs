//! Exact scalars and exact linear algebra.
//!
//! Everything here is float-free. The scalar types implement [`Field`];
//! matrices, kernels and subspaces are generic over it.

mod cyclotomic;
mod eigen;
mod field;
mod matrix;
mod sparse;
mod subspace;
pub mod syntax;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyc};
pub use eigen::{eigenprojectors, eigenprojectors_with_root, eigenspace_bases};
pub use field::Field;
pub use matrix::{axpy, dot, is_zero_vec, unit_vec, vec_add, vec_scale, vec_sub, ExactMatrix, Rref};
pub use sparse::{sparse_axpy, sparse_from_dense, sparse_to_dense, SparseEchelon, SparseVec};
pub use subspace::Subspace;

/// `field_embed` as a free function.
pub fn field_embed(s: &Cyc, new_order: u32) -> crate::Result<Cyc> {
    s.field_embed(new_order)
}

/// Kernel basis of a matrix; see [`ExactMatrix::kernel_basis`].
pub fn kernel_basis<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}
