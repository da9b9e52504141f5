//! Linearising coordinates at fixed points of finite-order Möbius maps.

use num_traits::{One, Zero};

use super::jets::rational_jet;
use super::ratfunc::{Mobius, RationalFunction, SpherePoint};
use crate::exactmath::Field;
use crate::{Error, Matrix, Result, Scalar};

/// The coordinate `t = (x - x0)/(a x + b)` at `x0`, in which the
/// stabiliser generator acts as `t ↦ ζ t` (so `γ₀·t = ζ⁻¹ t` on functions).
#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    pub x0: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub zeta: Scalar,
    pub order: u32,
}

impl Chart {
    /// The chart as a Möbius map `x ↦ t`.
    pub fn map(&self) -> Mobius {
        Mobius::new(Scalar::one(), self.x0.neg_ref(), self.a.clone(), self.b.clone()).expect("chart is invertible")
    }

    /// `x = (x0 + b t)/(1 - a t)`.
    pub fn inverse_map(&self) -> Mobius {
        self.map().inverse()
    }

    /// `f` written in the chart coordinate `t`.
    pub fn in_chart(&self, f: &RationalFunction) -> RationalFunction {
        f.compose_mobius(&self.inverse_map())
    }

    /// Taylor coefficients of `f` in `t` at `t = 0`.
    pub fn jet(&self, f: &RationalFunction, m: usize) -> Result<Vec<Scalar>> {
        rational_jet(&self.in_chart(f), &Scalar::zero(), m)
    }
}

/// Linearising chart for `gamma0` at its fixed point `x0`.
///
/// The chart is `(x - x0)/(x - x1)` with `x1` the other fixed point, or
/// `x - x0` when the other fixed point is ∞. Then `ζ = γ₀'(x0)`.
pub fn linearizing_coordinate(x0: &SpherePoint, gamma0: &Matrix) -> Result<Chart> {
    let g = Mobius::from_matrix(gamma0)?;
    let x = x0
        .as_finite()
        .ok_or_else(|| Error::UnsupportedChart("charts are built at finite points".into()))?;
    if g.apply(x0) != *x0 {
        return Err(Error::Precondition(format!("the Möbius map does not fix {x0}")));
    }
    if g.is_identity() {
        return Ok(Chart {
            x0: x.clone(),
            a: Scalar::zero(),
            b: Scalar::one(),
            zeta: Scalar::one(),
            order: 1,
        });
    }
    let [al, _be, ga, de] = g.entries().clone();
    let (a, b) = if ga.is_zero() {
        // Affine map; the other fixed point is ∞ unless the map is a translation.
        if al == de {
            return Err(Error::NotFiniteOrder("parabolic Möbius map".into()));
        }
        (Scalar::zero(), Scalar::one())
    } else {
        let x1 = al.sub_ref(&de).mul_ref(&ga.inv().expect("nonzero")).sub_ref(x);
        if &x1 == x {
            return Err(Error::NotFiniteOrder("parabolic Möbius map".into()));
        }
        (Scalar::one(), x1.neg_ref())
    };
    let zeta = g
        .derivative_at(x)
        .ok_or_else(|| Error::Internal("fixed point is a pole".into()))?;
    let order = zeta
        .root_order()
        .ok_or_else(|| Error::NotFiniteOrder(format!("multiplier {zeta} is not a root of unity")))?;
    let chart = Chart {
        x0: x.clone(),
        a,
        b,
        zeta,
        order,
    };
    // Symbolic check: t∘γ₀∘t⁻¹ is t ↦ ζ t.
    let conj = chart.map().compose(&g).compose(&chart.inverse_map());
    if conj != Mobius::scaling(chart.zeta.clone())? {
        return Err(Error::Internal("chart does not linearise the stabiliser".into()));
    }
    Ok(chart)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ExactMatrix;

    fn m(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Matrix {
        ExactMatrix::from_rows(vec![vec![a, b], vec![c, d]]).unwrap()
    }

    #[test]
    fn rotation_at_zero() {
        let z5 = Scalar::zeta(5);
        let g = m(z5.clone(), Scalar::zero(), Scalar::zero(), z5.pow(-1).unwrap());
        let c = linearizing_coordinate(&SpherePoint::Finite(Scalar::zero()), &g).unwrap();
        assert_eq!((c.a.clone(), c.b.clone()), (Scalar::zero(), Scalar::one()));
        assert_eq!(c.zeta, z5.pow(2).unwrap());
        assert_eq!(c.order, 5);
    }

    #[test]
    fn identity_and_half_turn() {
        let id = Matrix::identity(2);
        let c = linearizing_coordinate(&SpherePoint::Finite(Scalar::int(4)), &id).unwrap();
        assert_eq!(c.zeta, Scalar::one());
        let neg = m(Scalar::int(-1), Scalar::zero(), Scalar::zero(), Scalar::one());
        let c = linearizing_coordinate(&SpherePoint::Finite(Scalar::zero()), &neg).unwrap();
        assert_eq!(c.zeta, Scalar::int(-1));
        assert_eq!(c.order, 2);
    }

    #[test]
    fn involution_with_two_finite_fixed_points() {
        // x ↦ 1/x fixes 1 and -1.
        let s = m(Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero());
        let c = linearizing_coordinate(&SpherePoint::Finite(Scalar::one()), &s).unwrap();
        assert_eq!(c.zeta, Scalar::int(-1));
        assert_eq!(c.b, Scalar::one());
        let f = RationalFunction::parse("z").unwrap();
        // x = (1 + t)/(1 - t) = 1 + 2t + 2t^2 + ...
        assert_eq!(
            c.jet(&f, 3).unwrap(),
            vec![Scalar::int(1), Scalar::int(2), Scalar::int(2)]
        );
    }

    #[test]
    fn errors() {
        let t = m(Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::one());
        assert!(linearizing_coordinate(&SpherePoint::Finite(Scalar::zero()), &t).is_err());
        let neg = m(Scalar::int(-1), Scalar::zero(), Scalar::zero(), Scalar::one());
        assert!(linearizing_coordinate(&SpherePoint::Finite(Scalar::one()), &neg).is_err());
        let dil = m(Scalar::int(2), Scalar::zero(), Scalar::zero(), Scalar::one());
        assert!(matches!(
            linearizing_coordinate(&SpherePoint::Finite(Scalar::zero()), &dil),
            Err(Error::NotFiniteOrder(_))
        ));
    }
}
