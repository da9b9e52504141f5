//! Lie algebras presented by structure constants.

mod algebra;

pub use algebra::{verify_isomorphism, MatrixCoordinates, Quotient, StructLieAlgebra};

use crate::exactmath::{ExactMatrix, Field};

use crate::{Error, Result};

/// A Lie algebra of matrices with a fixed basis, so that matrix maps such as
/// conjugation can be turned into coordinate matrices.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra<F> {
    pub basis: Vec<ExactMatrix<F>>,
    pub algebra: StructLieAlgebra<F>,
    coords: MatrixCoordinates<F>,
}

impl<F: Field> MatrixLieAlgebra<F> {
    pub fn new(labels: Vec<String>, basis: Vec<ExactMatrix<F>>) -> Result<Self> {
        let algebra = StructLieAlgebra::from_matrices(labels, &basis)?;
        let coords = MatrixCoordinates::new(&basis)?;
        Ok(MatrixLieAlgebra { basis, algebra, coords })
    }

    pub fn coordinates(&self, m: &ExactMatrix<F>) -> Result<Vec<F>> {
        self.coords
            .coordinates(m)
            .ok_or_else(|| Error::Precondition("matrix is not in the span of the basis".into()))
    }

    pub fn to_matrix(&self, v: &[F]) -> ExactMatrix<F> {
        let n = self.basis[0].rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for (c, b) in v.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Coordinate matrix of a linear map given on matrices.
    pub fn linear_map(&self, f: impl Fn(&ExactMatrix<F>) -> ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coordinates(&f(b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::from_columns(&cols, self.basis.len()))
    }

    /// `X ↦ g X g⁻¹`.
    pub fn conjugation(&self, g: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        let ginv = g
            .inverse()
            .ok_or_else(|| Error::Precondition("singular conjugating matrix".into()))?;
        self.linear_map(|x| g.mul(x).mul(&ginv))
    }

    /// `X ↦ -M Xᵀ M⁻¹`.
    pub fn minus_transpose_conjugation(&self, m: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        let minv = m
            .inverse()
            .ok_or_else(|| Error::Precondition("singular matrix".into()))?;
        let neg = F::one().neg_ref();
        self.linear_map(|x| m.mul(&x.transpose()).mul(&minv).scale(&neg))
    }
}

fn unit<F: Field>(n: usize, r: usize, c: usize) -> ExactMatrix<F> {
    let mut m = ExactMatrix::zeros(n, n);
    m.set(r, c, F::one());
    m
}

/// sl₂ with basis `h = diag(1,-1)`, `e = E₁₂`, `f = E₂₁`.
pub fn sl2<F: Field>() -> MatrixLieAlgebra<F> {
    let h = ExactMatrix::diag(&[F::one(), F::one().neg_ref()]);
    MatrixLieAlgebra::new(
        vec!["h".into(), "e".into(), "f".into()],
        vec![h, unit(2, 0, 1), unit(2, 1, 0)],
    )
    .expect("sl2 basis")
}

/// sl₃ with basis `h1 = E₁₁-E₂₂`, `h2 = E₂₂-E₃₃` and the matrix units
/// `e12, e23, e13, e21, e32, e31`.
pub fn sl3<F: Field>() -> MatrixLieAlgebra<F> {
    let one = F::one();
    let m1 = one.neg_ref();
    let h1 = ExactMatrix::diag(&[one.clone(), m1.clone(), F::zero()]);
    let h2 = ExactMatrix::diag(&[F::zero(), one, m1]);
    let units = [(0, 1), (1, 2), (0, 2), (1, 0), (2, 1), (2, 0)];
    let mut labels = vec!["h1".to_string(), "h2".to_string()];
    let mut basis = vec![h1, h2];
    for (r, c) in units {
        labels.push(format!("e{}{}", r + 1, c + 1));
        basis.push(unit(3, r, c));
    }
    MatrixLieAlgebra::new(labels, basis).expect("sl3 basis")
}

/// Linear combination of labelled basis vectors, e.g. `h1 - 2*e12`.
pub fn format_vector<F: Field>(v: &[F], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let compound = text.trim_start_matches('-').contains(' ');
        let (neg, body) = if !compound && text.starts_with('-') {
            (true, &text[1..])
        } else {
            (false, text.as_str())
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if compound {
            out.push_str(&format!("({body})*"));
        } else if body != "1" {
            out.push_str(&format!("{body}*"));
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A named preset algebra.
pub fn preset<F: Field>(name: &str) -> Result<MatrixLieAlgebra<F>> {
    match name {
        "sl2" => Ok(sl2()),
        "sl3" => Ok(sl3()),
        other => Err(Error::Config(format!("unknown Lie algebra preset {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Subspace;
    use crate::Scalar;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2::<BigRational>().algebra;
        assert_eq!(g.bracket_basis(1, 2), vec![q(1), q(0), q(0)]);
        assert_eq!(g.bracket_basis(0, 1), vec![q(0), q(2), q(0)]);
        assert_eq!(g.bracket_basis(0, 2), vec![q(0), q(0), q(-2)]);
        g.check_jacobi().unwrap();
        g.check_antisymmetry().unwrap();
    }

    #[test]
    fn sl3_is_semisimple() {
        let g = sl3::<BigRational>().algebra;
        g.check_jacobi().unwrap();
        assert_eq!(g.radical().dim(), 0);
        assert_eq!(g.killing_form().rank(), 8);
    }

    #[test]
    fn ideal_closure_of_e_is_everything() {
        let g = sl2::<BigRational>().algebra;
        let s = Subspace::span(3, &[vec![q(0), q(1), q(0)]]);
        assert_eq!(g.ideal_closure(&s).dim(), 3);
        assert_eq!(g.ideal_closure(&Subspace::zero(3)).dim(), 0);
    }

    #[test]
    fn two_dim_nonabelian_radical() {
        let g = StructLieAlgebra::new(vec!["h".into(), "x".into()], vec![(0, 1, 1, q(2))], None).unwrap();
        assert_eq!(g.radical().dim(), 2);
        assert!(g.is_solvable());
    }

    #[test]
    fn chevalley_involution_is_automorphism() {
        let g = sl2::<BigRational>().algebra;
        let f = ExactMatrix::from_rows(vec![
            vec![q(-1), q(0), q(0)],
            vec![q(0), q(0), q(-1)],
            vec![q(0), q(-1), q(0)],
        ])
        .unwrap();
        assert!(verify_isomorphism(&f, &g, &g).unwrap());
        assert!(verify_isomorphism(&ExactMatrix::identity(3), &g, &g).unwrap());
        let bad = ExactMatrix::diag(&[q(1), q(2), q(1)]);
        assert!(!verify_isomorphism(&bad, &g, &g).unwrap());
    }

    #[test]
    fn json_round_trip_over_cyclotomics() {
        let g = sl3::<Scalar>().algebra;
        let j = g.to_json_string();
        let back = StructLieAlgebra::<Scalar>::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), j);
    }

    #[test]
    fn quotient_by_center() {
        // gl2-like: sl2 ⊕ line, quotient by the line is sl2.
        let mut entries: Vec<(usize, usize, usize, BigRational)> = sl2::<BigRational>()
            .algebra
            .entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .collect();
        entries.retain(|_| true);
        let g = StructLieAlgebra::new(vec!["h".into(), "e".into(), "f".into(), "c".into()], entries, None).unwrap();
        let z = g.center();
        assert_eq!(z.dim(), 1);
        let qt = g.quotient(&z).unwrap();
        assert_eq!(qt.algebra.dim(), 3);
        qt.algebra.check_jacobi().unwrap();
        assert_eq!(qt.algebra.radical().dim(), 0);
    }
}
