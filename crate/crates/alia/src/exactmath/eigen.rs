//! Eigenspace decomposition of finite-order operators.

use super::field::Field;
use super::matrix::ExactMatrix;
use crate::{Error, Result};

/// Spectral projectors `P_m = (1/ν) Σ_k ζ^{-mk} A^k` for `m = 0..ν-1`,
/// where ζ is the field's standard primitive ν-th root of unity.
pub fn eigenprojectors<F: Field>(a: &ExactMatrix<F>, nu: u32) -> Result<Vec<ExactMatrix<F>>> {
    let zeta =
        F::root_of_unity(nu).ok_or_else(|| Error::IncompatibleField(format!("no primitive {nu}-th root of unity")))?;
    eigenprojectors_with_root(a, nu, &zeta)
}

/// As [`eigenprojectors`], for an explicitly chosen primitive root.
pub fn eigenprojectors_with_root<F: Field>(a: &ExactMatrix<F>, nu: u32, zeta: &F) -> Result<Vec<ExactMatrix<F>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("eigenprojectors needs a square matrix".into()));
    }
    if nu == 0 {
        return Err(Error::NotFiniteOrder("order 0".into()));
    }
    let n = a.rows();
    let mut powers = vec![ExactMatrix::identity(n)];
    for k in 1..=nu as usize {
        let next = powers[k - 1].mul(a);
        powers.push(next);
    }
    if !powers[nu as usize].is_identity() {
        return Err(Error::NotFiniteOrder(format!("A^{nu} is not the identity")));
    }
    let zinv = zeta.inv().expect("root of unity is nonzero");
    let nu_inv = F::from_i64(nu as i64).inv().expect("char 0");
    let mut out = Vec::with_capacity(nu as usize);
    for m in 0..nu as usize {
        // ζ^{-m}
        let mut step = F::one();
        for _ in 0..m {
            step = step.mul_ref(&zinv);
        }
        let mut coef = F::one();
        let mut acc = ExactMatrix::zeros(n, n);
        for power in powers.iter().take(nu as usize) {
            acc = acc.add(&power.scale(&coef));
            coef = coef.mul_ref(&step);
        }
        out.push(acc.scale(&nu_inv));
    }
    Ok(out)
}

/// Bases of the eigenspaces of `a` for the eigenvalues `ζ^m`, `m = 0..ν-1`.
/// Each basis is the reduced echelon basis of the projector's image, so the
/// ordering is reproducible.
pub fn eigenspace_bases<F: Field>(a: &ExactMatrix<F>, nu: u32, zeta: &F) -> Result<Vec<Vec<Vec<F>>>> {
    let projs = eigenprojectors_with_root(a, nu, zeta)?;
    Ok(projs.iter().map(|p| p.transpose().rref().reduced.to_rows()).collect())
}
