//! Twisted truncated current algebras `(𝔤 ⊗ C[z]/(z^m))^{γ₀}`.

use num_traits::Zero;

use crate::equivariant::{GroupAction, JetQuotient};
use crate::exactmath::{eigenspace_bases, ExactMatrix, Field};
use crate::funring::SpherePoint;
use crate::liealg::{format_vector, verify_isomorphism};
use crate::{Error, LieAlgebra, Matrix, Result, Scalar};

/// The invariants of `γ₀ ⊗ (z ↦ ζ⁻¹z)` in `𝔤 ⊗ C[z]/(z^m)`, spanned by
/// `A ⊗ z^k` with `γ₀A = ζ^k A`.
#[derive(Clone, Debug)]
pub struct TwistedTruncatedCurrentAlgebra {
    pub lie: LieAlgebra,
    pub gamma0: Matrix,
    pub zeta: Scalar,
    pub nu: u32,
    pub m: usize,
    /// Eigenspace bases for the exponents `0..ν`.
    pub eigenbases: Vec<Vec<Vec<Scalar>>>,
    /// `(eigenvector, exponent)` per basis element, ordered by exponent.
    pub basis: Vec<(Vec<Scalar>, usize)>,
    pub realized: LieAlgebra,
}

/// Coordinates with respect to all eigenvectors, grouped by residue.
struct EigenFrame {
    /// Columns are the eigenvectors, grouped by residue.
    change_inv: Matrix,
    /// Offset of each residue in the concatenated list.
    offsets: Vec<usize>,
}

impl EigenFrame {
    fn new(eigenbases: &[Vec<Vec<Scalar>>], n: usize) -> Result<Self> {
        let mut cols = Vec::new();
        let mut offsets = Vec::new();
        for b in eigenbases {
            offsets.push(cols.len());
            cols.extend(b.iter().cloned());
        }
        if cols.len() != n {
            return Err(Error::Precondition(
                "the automorphism is not diagonalisable over the given root".into(),
            ));
        }
        let change_inv = ExactMatrix::from_columns(&cols, n)
            .inverse()
            .ok_or_else(|| Error::Precondition("eigenvectors are linearly dependent".into()))?;
        Ok(EigenFrame { change_inv, offsets })
    }

    /// Coordinates of `v ∈ 𝔤_{r}` in the `r`-th eigenbasis.
    fn coordinates(&self, v: &[Scalar], r: usize, len: usize) -> Result<Vec<Scalar>> {
        let c = self.change_inv.mul_vec(v);
        let lo = self.offsets[r];
        let outside = c
            .iter()
            .enumerate()
            .any(|(i, x)| (i < lo || i >= lo + len) && !x.is_zero());
        if outside {
            return Err(Error::Internal(format!("vector is not in eigenspace {r}")));
        }
        Ok(c[lo..lo + len].to_vec())
    }
}

/// Order of `a` as a matrix, if at most `bound`.
pub fn matrix_order(a: &Matrix, bound: u32) -> Option<u32> {
    let mut p = a.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(a);
    }
    None
}

/// Builds the algebra for an automorphism `gamma0` whose eigenvalues are
/// powers of the root of unity `zeta`.
pub fn build(lie: &LieAlgebra, gamma0: &Matrix, zeta: &Scalar, m: usize) -> Result<TwistedTruncatedCurrentAlgebra> {
    let nu = zeta
        .root_order()
        .ok_or_else(|| Error::NotFiniteOrder(format!("{zeta} is not a root of unity")))?;
    let eig = eigenspace_bases(gamma0, nu, zeta)?;
    build_with_eigenbasis(lie, gamma0, zeta, m, eig)
}

/// As [`build`], with prescribed eigenspace bases.
pub fn build_with_eigenbasis(
    lie: &LieAlgebra,
    gamma0: &Matrix,
    zeta: &Scalar,
    m: usize,
    eigenbases: Vec<Vec<Vec<Scalar>>>,
) -> Result<TwistedTruncatedCurrentAlgebra> {
    let n = lie.dim();
    if gamma0.rows() != n || gamma0.cols() != n {
        return Err(Error::DimensionMismatch(format!("automorphism must be {n}x{n}")));
    }
    if !verify_isomorphism(gamma0, lie, lie)? {
        return Err(Error::Precondition("gamma0 is not a Lie algebra automorphism".into()));
    }
    let nu = zeta
        .root_order()
        .ok_or_else(|| Error::NotFiniteOrder(format!("{zeta} is not a root of unity")))?;
    if !gamma0.pow(nu).is_identity() {
        return Err(Error::NotFiniteOrder(format!(
            "gamma0 does not have order dividing {nu}"
        )));
    }
    if eigenbases.len() != nu as usize {
        return Err(Error::DimensionMismatch(format!("expected {nu} eigenspaces")));
    }
    for (k, b) in eigenbases.iter().enumerate() {
        let ev = zeta.pow(k as i64).expect("root of unity");
        for v in b {
            if gamma0.mul_vec(v) != v.iter().map(|x| x.mul_ref(&ev)).collect::<Vec<_>>() {
                return Err(Error::Precondition(format!("vector is not a {ev}-eigenvector")));
            }
        }
    }
    let frame = EigenFrame::new(&eigenbases, n)?;
    let mut basis = Vec::new();
    for k in 0..m {
        let r = k % nu as usize;
        for v in &eigenbases[r] {
            basis.push((v.clone(), k));
        }
    }
    let labels = basis
        .iter()
        .map(|(v, k)| format!("{}@z^{k}", format_vector(v, lie.labels())))
        .collect();
    let grading = Some(basis.iter().map(|(_, k)| *k as i64).collect());
    let first_at = |k: usize| basis.iter().position(|(_, e)| *e == k);
    let mut err = None;
    let realized = LieAlgebra::from_bracket_fn(labels, grading, |a, b| {
        let mut out = vec![Scalar::zero(); basis.len()];
        let (ka, kb) = (basis[a].1, basis[b].1);
        if ka + kb >= m {
            return out;
        }
        let k = ka + kb;
        let r = k % nu as usize;
        let br = lie.bracket(&basis[a].0, &basis[b].0).expect("dimensions match");
        match frame.coordinates(&br, r, eigenbases[r].len()) {
            Ok(c) => {
                if let Some(start) = first_at(k) {
                    for (i, x) in c.into_iter().enumerate() {
                        out[start + i] = x;
                    }
                } else if c.iter().any(|x| !x.is_zero()) {
                    err = Some(Error::Internal("bracket lands in an empty degree".into()));
                }
            }
            Err(e) => err = Some(e),
        }
        out
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(TwistedTruncatedCurrentAlgebra {
        lie: lie.clone(),
        gamma0: gamma0.clone(),
        zeta: zeta.clone(),
        nu,
        m,
        eigenbases,
        basis,
        realized,
    })
}

/// The local model at `x0`: `γ₀` generates the stabiliser and `ζ` is its
/// multiplier in the linearising chart.
pub fn build_at(action: &GroupAction, x0: &SpherePoint, m: usize) -> Result<TwistedTruncatedCurrentAlgebra> {
    let (st, chart) = action.local_chart(x0)?;
    build(action.lie(), &action.elements()[st.generator].lie, &chart.zeta, m)
}

impl TwistedTruncatedCurrentAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index of the first basis element of exponent `k`.
    pub fn degree_start(&self, k: usize) -> usize {
        self.basis.iter().take_while(|(_, e)| *e < k).count()
    }

    /// Coordinates of `v ∈ 𝔤_{k mod ν}` placed at exponent `k`.
    pub fn embed(&self, v: &[Scalar], k: usize) -> Result<Vec<Scalar>> {
        let r = k % self.nu as usize;
        let b = &self.eigenbases[r];
        let m = ExactMatrix::from_columns(b, self.lie.dim());
        let c = m
            .solve(v)
            .ok_or_else(|| Error::Precondition(format!("vector is not in eigenspace {r}")))?;
        let mut out = vec![Scalar::zero(); self.dim()];
        let start = self.degree_start(k);
        for (i, x) in c.into_iter().enumerate() {
            out[start + i] = x;
        }
        Ok(out)
    }
}

/// For `m = ν`: the algebra has the dimension of `𝔤`, and its bracket is the
/// bracket of `𝔤` in the eigenbasis with all components of total exponent
/// `≥ ν` dropped.
pub fn contraction_check(t: &TwistedTruncatedCurrentAlgebra) -> Result<bool> {
    if t.m != t.nu as usize {
        return Err(Error::Precondition(format!(
            "contraction needs m = ν = {}, got m = {}",
            t.nu, t.m
        )));
    }
    let n = t.lie.dim();
    if t.dim() != n {
        return Ok(false);
    }
    // Independent path: full change of basis, then truncate by degree.
    let p = ExactMatrix::from_columns(&t.basis.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>(), n);
    let pinv = p
        .inverse()
        .ok_or_else(|| Error::Internal("eigenbasis is singular".into()))?;
    for a in 0..n {
        for b in 0..n {
            let full = pinv.mul_vec(&t.lie.bracket(&t.basis[a].0, &t.basis[b].0)?);
            let keep = t.basis[a].1 + t.basis[b].1 < t.nu as usize;
            let want: Vec<Scalar> = if keep { full } else { vec![Scalar::zero(); n] };
            if t.realized.bracket_basis(a, b) != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sends each basis vector `v ⊗ t^k + …` of the jet quotient to its leading
/// coefficient at exponent `k`, and certifies the result is an isomorphism.
pub fn leading_coefficient_iso(q: &JetQuotient, t: &TwistedTruncatedCurrentAlgebra) -> Result<Matrix> {
    if q.m != t.m {
        return Err(Error::DimensionMismatch(format!(
            "jet order {} against truncation {}",
            q.m, t.m
        )));
    }
    for k in 0..t.m {
        let lhs = q.t_degrees.iter().filter(|&&d| d == k).count();
        let rhs = t.basis.iter().filter(|(_, e)| *e == k).count();
        if lhs != rhs {
            return Err(Error::Unstabilized(format!(
                "degree {k} of the quotient has dimension {lhs}, the local model {rhs}; raise the pole order"
            )));
        }
    }
    let cols = (0..q.dim())
        .map(|b| {
            let k = q.t_degrees[b];
            t.embed(q.coefficient(b, k), k)
        })
        .collect::<Result<Vec<_>>>()?;
    let f = ExactMatrix::from_columns(&cols, t.dim());
    if !verify_isomorphism(&f, &q.algebra, &t.realized)? {
        return Err(Error::Internal(
            "leading coefficients do not give an isomorphism".into(),
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::sl2;

    fn rotation(order: u32) -> (LieAlgebra, Matrix, Scalar) {
        let m = sl2::<Scalar>();
        let z = Scalar::zeta(order);
        let g = Matrix::diag(&[z.clone(), z.pow(-1).unwrap()]);
        let a = m.conjugation(&g).unwrap();
        (m.algebra, a, z)
    }

    #[test]
    fn sl2_order_five_exponents() {
        let (lie, a, z) = rotation(5);
        // e has eigenvalue ζ² = (ζ⁻¹)³.
        let zeta = z.pow(-1).unwrap();
        let t = build(&lie, &a, &zeta, 6).unwrap();
        assert_eq!(t.realized.labels(), ["h@z^0", "f@z^2", "e@z^3", "h@z^5"]);
        t.realized.check_jacobi().unwrap();
        t.realized.check_grading().unwrap();
    }

    #[test]
    fn untwisted_is_plain_truncation() {
        let lie = sl2::<Scalar>().algebra;
        let t = build(&lie, &Matrix::identity(3), &Scalar::int(1), 3).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(contraction_check(&build(&lie, &Matrix::identity(3), &Scalar::int(1), 1).unwrap()).unwrap());
    }

    #[test]
    fn torus_model_and_contraction() {
        let (lie, a, _) = rotation(4);
        // Conjugation by diag(i, -i): e, f ↦ -e, -f.
        let t = build(&lie, &a, &Scalar::int(-1), 2).unwrap();
        assert_eq!(t.realized.labels(), ["h@z^0", "e@z^1", "f@z^1"]);
        assert!(t.realized.bracket_basis(1, 2).iter().all(Zero::is_zero));
        assert!(contraction_check(&t).unwrap());
        assert!(contraction_check(&build(&lie, &a, &Scalar::int(-1), 3).unwrap()).is_err());
    }
}
