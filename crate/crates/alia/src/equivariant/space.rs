//! Finite-dimensional pieces of the function ring, filtered by pole order.

use num_traits::{One, Zero};

use crate::exactmath::ExactMatrix;
use crate::funring::{Mobius, Poly, RationalFunction, SpherePoint};
use crate::{Error, Matrix, Result, Scalar};

/// Functions with poles of order at most `D` at each point of `S`, with the
/// partial fraction basis `1`, `z^k` (if ∞ ∈ S) and `(z-ε)^{-k}`, `1 ≤ k ≤ D`.
/// The basis is ordered by pole order, so that degree `d` is a prefix.
#[derive(Clone, Debug)]
pub struct FunctionSpace {
    poles: Vec<SpherePoint>,
    degree: usize,
    basis: Vec<RationalFunction>,
    degrees: Vec<usize>,
    /// Π (z-ε)^D over the finite poles.
    common_den: Poly<Scalar>,
    /// Maps coefficients of `f·Q` to coordinates.
    solver: Matrix,
}

impl FunctionSpace {
    pub fn new(poles: &[SpherePoint], degree: usize) -> Result<Self> {
        if poles.is_empty() {
            return Err(Error::Precondition("the pole set must be nonempty".into()));
        }
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for k in 0..=degree {
            for f in basis_of_degree(poles, k) {
                basis.push(f);
                degrees.push(k);
            }
        }
        let mut common_den = Poly::one();
        for p in poles {
            if let SpherePoint::Finite(e) = p {
                common_den = common_den.mul(&Poly::linear_root(e).pow(degree));
            }
        }
        let n = basis.len();
        let cols: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|f| {
                let p = numerator_over(f, &common_den).expect("basis functions have allowed poles");
                (0..n).map(|k| p.coeff(k)).collect()
            })
            .collect();
        let solver = ExactMatrix::from_columns(&cols, n)
            .inverse()
            .ok_or_else(|| Error::Internal("partial fraction basis is singular".into()))?;
        Ok(FunctionSpace {
            poles: poles.to_vec(),
            degree,
            basis,
            degrees,
            common_den,
            solver,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poles(&self) -> &[SpherePoint] {
        &self.poles
    }

    pub fn basis(&self) -> &[RationalFunction] {
        &self.basis
    }

    /// Pole order of the `j`-th basis function.
    pub fn degree_of(&self, j: usize) -> usize {
        self.degrees[j]
    }

    /// Number of basis functions of pole order at most `d`.
    pub fn prefix_len(&self, d: usize) -> usize {
        self.degrees.iter().take_while(|&&k| k <= d).count()
    }

    pub fn coordinates(&self, f: &RationalFunction) -> Result<Vec<Scalar>> {
        let p = numerator_over(f, &self.common_den)
            .filter(|p| p.degree().map_or(true, |d| d < self.dim()))
            .ok_or_else(|| {
                Error::Precondition(format!("{f} is not in the filtration piece of degree {}", self.degree))
            })?;
        let v: Vec<Scalar> = (0..self.dim()).map(|k| p.coeff(k)).collect();
        let c = self.solver.mul_vec(&v);
        // Polynomial part beyond degree D lands on no basis vector: verify.
        let back = self.combine(&c);
        if &back != f {
            return Err(Error::Precondition(format!(
                "{f} has poles of order above {}",
                self.degree
            )));
        }
        Ok(c)
    }

    pub fn combine(&self, c: &[Scalar]) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (x, f) in c.iter().zip(&self.basis) {
            if !x.is_zero() {
                acc = acc.add(&f.scale(x));
            }
        }
        acc
    }

    /// Matrix of `f ↦ f ∘ γ⁻¹` on this space.
    pub fn action_matrix(&self, gamma: &Mobius) -> Result<Matrix> {
        let inv = gamma.inverse();
        let cols = self
            .basis
            .iter()
            .map(|f| self.coordinates(&f.compose_mobius(&inv)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::from_columns(&cols, self.dim()))
    }
}

/// The basis functions of exact pole order `k`: `1` for `k = 0`, otherwise
/// one function per pole, in the order of `poles`.
pub fn basis_of_degree(poles: &[SpherePoint], k: usize) -> Vec<RationalFunction> {
    if k == 0 {
        return vec![RationalFunction::constant(Scalar::one())];
    }
    poles
        .iter()
        .map(|p| match p {
            SpherePoint::Infinity => RationalFunction::polynomial(Poly::monomial(Scalar::one(), k)),
            SpherePoint::Finite(e) => RationalFunction::linear_power(e, -(k as i64)),
        })
        .collect()
}

/// `f·q` as a polynomial, if `q` clears the denominator of `f`.
fn numerator_over(f: &RationalFunction, q: &Poly<Scalar>) -> Option<Poly<Scalar>> {
    let co = q.div_exact(f.den())?;
    Some(f.num().mul(&co))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_round_trip() {
        let s = vec![
            SpherePoint::Infinity,
            SpherePoint::Finite(Scalar::zero()),
            SpherePoint::Finite(Scalar::int(1)),
        ];
        let v = FunctionSpace::new(&s, 3).unwrap();
        assert_eq!(v.dim(), 10);
        let f = RationalFunction::parse("(z^5 + 1)/(z^2*(z-1))").unwrap();
        let c = v.coordinates(&f).unwrap();
        assert_eq!(v.combine(&c), f);
        let too_big = RationalFunction::parse("1/z^4").unwrap();
        assert!(v.coordinates(&too_big).is_err());
        let bad_pole = RationalFunction::parse("1/(z+1)").unwrap();
        assert!(v.coordinates(&bad_pole).is_err());
        let big_poly = RationalFunction::parse("z^4").unwrap();
        assert!(v.coordinates(&big_poly).is_err());
    }

    #[test]
    fn inversion_acts_on_laurent_space() {
        let s = vec![SpherePoint::Finite(Scalar::zero()), SpherePoint::Infinity];
        let v = FunctionSpace::new(&s, 2).unwrap();
        let inv = Mobius::new(Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero()).unwrap();
        let a = v.action_matrix(&inv).unwrap();
        assert!(a.mul(&a).is_identity());
        assert_eq!(v.prefix_len(1), 3);
    }
}
