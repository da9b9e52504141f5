//! Taylor jets, Jordan-block evaluation, intertwiners and interpolation.

use num_traits::{One, Zero};

use super::poly::{series, Poly};
use super::ratfunc::{PoleRationalFunction, RationalFunction, SpherePoint};
use crate::exactmath::{ExactMatrix, Field};
use crate::{Error, Matrix, Result, Scalar};

/// Taylor-normalised coefficients `c_i = f^(i)(x0)/i!`, `i < m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub base: SpherePoint,
    pub coeffs: Vec<Scalar>,
}

impl Jet {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Truncated product of two jets at the same point.
    pub fn mul(&self, o: &Jet) -> Jet {
        let m = self.order().min(o.order());
        Jet {
            base: self.base.clone(),
            coeffs: series::mul(&self.coeffs, &o.coeffs, m),
        }
    }
}

/// Jet of an unrestricted rational function at a finite point.
pub fn rational_jet(f: &RationalFunction, x0: &Scalar, m: usize) -> Result<Vec<Scalar>> {
    let num = f.num().taylor_shift(x0);
    let den = f.den().taylor_shift(x0);
    let inv = series::inv(&series::truncate(den.coeffs(), m.max(1)), m).ok_or_else(|| Error::Pole(x0.to_string()))?;
    Ok(series::mul(num.coeffs(), &inv, m))
}

pub fn taylor_jet(f: &PoleRationalFunction, x0: &SpherePoint, m: usize) -> Result<Jet> {
    if m == 0 {
        return Err(Error::Precondition("jet order must be at least 1".into()));
    }
    if f.poles().contains(x0) {
        return Err(Error::Pole(x0.to_string()));
    }
    let x = finite_base(x0)?;
    Ok(Jet {
        base: x0.clone(),
        coeffs: rational_jet(f.function(), x, m)?,
    })
}

fn finite_base(x0: &SpherePoint) -> Result<&Scalar> {
    x0.as_finite()
        .ok_or_else(|| Error::UnsupportedChart("jets at infinity need an explicit Möbius change of coordinates".into()))
}

/// Upper triangular Toeplitz matrix of a jet.
pub fn jet_matrix(coeffs: &[Scalar]) -> Matrix {
    let m = coeffs.len();
    ExactMatrix::from_fn(m, m, |r, c| if c >= r { coeffs[c - r].clone() } else { Scalar::zero() })
}

/// `f(J_{x,m})`: entries `(i, i+k)` are `f^(k)(x)/k!`.
pub fn jordan_eval(f: &PoleRationalFunction, x: &SpherePoint, m: usize) -> Result<Matrix> {
    Ok(jet_matrix(&taylor_jet(f, x, m)?.coeffs))
}

/// The Jordan block `J_{x,m}` (eigenvalue `x`, ones above the diagonal).
pub fn jordan_block(x: &Scalar, m: usize) -> Matrix {
    ExactMatrix::from_fn(m, m, |r, c| {
        if r == c {
            x.clone()
        } else if c == r + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// Generators of the ring of functions with poles in `poles`:
/// `z` if ∞ is a pole, and `1/(z-ε)` for each finite pole ε.
pub fn ring_generators(poles: &[SpherePoint]) -> Result<Vec<PoleRationalFunction>> {
    poles
        .iter()
        .map(|p| {
            let f = match p {
                SpherePoint::Infinity => RationalFunction::z(),
                SpherePoint::Finite(e) => RationalFunction::linear_power(e, -1),
            };
            PoleRationalFunction::new(f, poles.to_vec())
        })
        .collect()
}

/// Dimension of the space of intertwiners from `ρ_{x,i}` to `ρ_{x2,j}`,
/// i.e. of `θ` with `θ ρ₁(f) = ρ₂(f) θ` for all ring generators `f`.
pub fn hom_dimension(x: &SpherePoint, i: usize, x2: &SpherePoint, j: usize, poles: &[SpherePoint]) -> Result<usize> {
    let gens = ring_generators(poles)?;
    if i == 0 || j == 0 {
        return Ok(0);
    }
    // Unknown θ is j×i, flattened row-major; each generator gives j*i equations.
    let n = i * j;
    let mut rows = Vec::new();
    for f in &gens {
        let a = jordan_eval(f, x, i)?;
        let b = jordan_eval(f, x2, j)?;
        for r in 0..j {
            for c in 0..i {
                // (θA)_{rc} - (Bθ)_{rc}
                let mut eq = vec![Scalar::zero(); n];
                for k in 0..i {
                    let v = a.get(k, c);
                    if !v.is_zero() {
                        eq[r * i + k] = eq[r * i + k].add_ref(v);
                    }
                }
                for k in 0..j {
                    let v = b.get(r, k);
                    if !v.is_zero() {
                        eq[k * i + c] = eq[k * i + c].sub_ref(v);
                    }
                }
                rows.push(eq);
            }
        }
    }
    let sys = ExactMatrix::from_rows(rows)?;
    Ok(n - sys.rank())
}

/// A polynomial `f` with `f^(j)(z_i) = 0` for `j < m` and `f^(m)(z_i) = c_i`.
///
/// `f = Σ_i c_i/m! (z-z_i)^m Π_{k≠i} ((z-z_k)/(z_i-z_k))^{m+1}`. Only genus 0
/// with ∞ among the poles is supported, so that polynomials are admissible.
pub fn hermite_interpolate(
    points: &[(SpherePoint, Scalar)],
    m: usize,
    poles: &[SpherePoint],
) -> Result<PoleRationalFunction> {
    if !poles.contains(&SpherePoint::Infinity) {
        return Err(Error::Unsupported(
            "interpolation needs infinity in the pole set; apply a Möbius change first".into(),
        ));
    }
    let mut zs = Vec::new();
    for (p, _) in points {
        if poles.contains(p) {
            return Err(Error::Precondition(format!("interpolation point {p} is a pole")));
        }
        let z = p
            .as_finite()
            .ok_or_else(|| Error::Precondition("interpolation point at infinity".into()))?;
        if zs.contains(z) {
            return Err(Error::Precondition(format!("duplicate interpolation point {z}")));
        }
        zs.push(z.clone());
    }
    let mut fact = Scalar::one();
    for k in 2..=m as i64 {
        fact = fact.mul_ref(&Scalar::int(k));
    }
    let fact_inv = fact.inv().expect("nonzero");
    let mut f = Poly::zero();
    for (i, (_, c)) in points.iter().enumerate() {
        let mut term = Poly::linear_root(&zs[i]).pow(m).scale(&c.mul_ref(&fact_inv));
        for (k, zk) in zs.iter().enumerate() {
            if k == i {
                continue;
            }
            let d = zs[i].sub_ref(zk).inv().expect("distinct points");
            term = term.mul(&Poly::linear_root(zk).scale(&d).pow(m + 1));
        }
        f = f.add(&term);
    }
    let f = PoleRationalFunction::new(RationalFunction::polynomial(f), poles.to_vec())?;
    for (p, c) in points {
        let jet = taylor_jet(&f, p, m + 1)?;
        let ok = jet.coeffs[..m].iter().all(Zero::is_zero) && jet.coeffs[m] == c.mul_ref(&fact_inv);
        if !ok {
            return Err(Error::Internal(format!("interpolant fails its jet conditions at {p}")));
        }
    }
    Ok(f)
}
