//! Points of the sphere, rational functions and pole-restricted functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::exactmath::syntax::{self, parse_expr};
use crate::exactmath::Field;
use crate::{Error, Result, Scalar};

/// A point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpherePoint {
    Finite(Scalar),
    Infinity,
}

impl SpherePoint {
    pub fn finite(x: Scalar) -> Self {
        SpherePoint::Finite(x)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Scalar> {
        match self {
            SpherePoint::Finite(x) => Some(x),
            SpherePoint::Infinity => None,
        }
    }

    /// Parse `inf` or a scalar literal.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(SpherePoint::Infinity);
        }
        Scalar::parse_scalar(t).map(SpherePoint::Finite).map_err(Error::Parse)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(x) => write!(f, "{x}"),
            SpherePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// A reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Poly<Scalar>,
    den: Poly<Scalar>,
}

impl RationalFunction {
    pub fn new(num: Poly<Scalar>, den: Poly<Scalar>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading().expect("nonzero").inv().expect("nonzero");
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        RationalFunction {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn polynomial(p: Poly<Scalar>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    /// The coordinate function `z`.
    pub fn z() -> Self {
        Self::polynomial(Poly::x())
    }

    /// `(z - e)^k` for any integer `k`.
    pub fn linear_power(e: &Scalar, k: i64) -> Self {
        let lin = Poly::linear_root(e).pow(k.unsigned_abs() as usize);
        if k >= 0 {
            Self::polynomial(lin)
        } else {
            RationalFunction {
                num: Poly::one(),
                den: lin,
            }
        }
    }

    pub fn num(&self) -> &Poly<Scalar> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Scalar> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero den")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::constant(Scalar::one());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, x: &SpherePoint) -> Option<Scalar> {
        match x {
            SpherePoint::Finite(v) => {
                let d = self.den.eval(v);
                if d.is_zero() {
                    None
                } else {
                    Some(self.num.eval(v).mul_ref(&d.inv().expect("nonzero")))
                }
            }
            SpherePoint::Infinity => {
                let dn = self.num.degree().map_or(-1, |d| d as i64);
                let dd = self.den.degree().expect("nonzero den") as i64;
                if dn > dd {
                    None
                } else if dn < dd {
                    Some(Scalar::zero())
                } else {
                    Some(self.num.leading().expect("nonzero").clone())
                }
            }
        }
    }

    /// Order of the pole at infinity (0 if holomorphic there).
    pub fn pole_order_at_infinity(&self) -> usize {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().expect("nonzero den");
        dn.saturating_sub(dd)
    }

    /// Composition `f ∘ h` with the Möbius map `h(x) = (ax + b)/(cx + d)`.
    pub fn compose_mobius(&self, h: &Mobius) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let [a, b, c, d] = h.entries();
        let u = Poly::new(vec![b.clone(), a.clone()]);
        let w = Poly::new(vec![d.clone(), c.clone()]);
        let n = self.num.degree().expect("nonzero");
        let e = self.den.degree().expect("nonzero");
        let mut num = self.num.homogenized_compose(&u, &w, n);
        let mut den = self.den.homogenized_compose(&u, &w, e);
        if e >= n {
            num = num.mul(&w.pow(e - n));
        } else {
            den = den.mul(&w.pow(n - e));
        }
        Self::new(num, den).expect("Möbius maps are invertible")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let e = parse_expr(s).map_err(Error::Parse)?;
        e.eval::<RationalFunction>().map_err(Error::Parse)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly<Scalar>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let compound = text.trim_start_matches('-').contains(' ');
        let (neg, body) = if !compound && text.starts_with('-') {
            (true, text[1..].to_string())
        } else {
            (false, text)
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let coef = if compound { format!("({body})") } else { body };
        match k {
            0 => write!(f, "{coef}")?,
            _ => {
                if coef != "1" {
                    write!(f, "{coef}*")?;
                }
                write!(f, "z")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write_poly(f, &self.num);
        }
        write!(f, "(")?;
        write_poly(f, &self.num)?;
        write!(f, ")/(")?;
        write_poly(f, &self.den)?;
        write!(f, ")")
    }
}

impl syntax::ExprTarget for RationalFunction {
    fn int(n: &BigInt) -> Self {
        Self::constant(<Scalar as syntax::ExprTarget>::int(n))
    }
    fn var() -> std::result::Result<Self, String> {
        Ok(Self::z())
    }
    fn zeta(n: u32) -> std::result::Result<Self, String> {
        Ok(Self::constant(Scalar::zeta(n)))
    }
    fn add(self, o: Self) -> Self {
        RationalFunction::add(&self, &o)
    }
    fn sub(self, o: Self) -> Self {
        RationalFunction::sub(&self, &o)
    }
    fn mul(self, o: Self) -> Self {
        RationalFunction::mul(&self, &o)
    }
    fn div(self, o: Self) -> std::result::Result<Self, String> {
        let inv = o.inv().map_err(|_| "division by zero".to_string())?;
        Ok(RationalFunction::mul(&self, &inv))
    }
    fn neg(self) -> Self {
        RationalFunction::neg(&self)
    }
    fn pow(self, e: i64) -> std::result::Result<Self, String> {
        RationalFunction::pow(&self, e).map_err(|_| "zero to a negative power".to_string())
    }
}

/// A Möbius transformation `x ↦ (ax + b)/(cx + d)`, stored projectively
/// normalised so that the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    m: [Scalar; 4],
}

impl Mobius {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        let det = a.mul_ref(&d).sub_ref(&b.mul_ref(&c));
        if det.is_zero() {
            return Err(Error::Precondition("singular Möbius matrix".into()));
        }
        let mut m = [a, b, c, d];
        let lead = m
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonsingular")
            .inv()
            .expect("nonzero");
        for x in m.iter_mut() {
            *x = x.mul_ref(&lead);
        }
        Ok(Mobius { m })
    }

    pub fn from_matrix(mat: &crate::Matrix) -> Result<Self> {
        if mat.rows() != 2 || mat.cols() != 2 {
            return Err(Error::DimensionMismatch("Möbius maps are 2x2".into()));
        }
        Self::new(
            mat.get(0, 0).clone(),
            mat.get(0, 1).clone(),
            mat.get(1, 0).clone(),
            mat.get(1, 1).clone(),
        )
    }

    pub fn identity() -> Self {
        Self::new(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()).expect("identity")
    }

    /// `x ↦ λx`.
    pub fn scaling(lambda: Scalar) -> Result<Self> {
        Self::new(lambda, Scalar::zero(), Scalar::zero(), Scalar::one())
    }

    pub fn entries(&self) -> &[Scalar; 4] {
        &self.m
    }

    pub fn to_matrix(&self) -> crate::Matrix {
        crate::Matrix::from_fn(2, 2, |r, c| self.m[2 * r + c].clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &o.m;
        Self::new(
            a.mul_ref(e).add_ref(&b.mul_ref(g)),
            a.mul_ref(f).add_ref(&b.mul_ref(h)),
            c.mul_ref(e).add_ref(&d.mul_ref(g)),
            c.mul_ref(f).add_ref(&d.mul_ref(h)),
        )
        .expect("product of invertible maps")
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.m;
        Self::new(d.clone(), b.neg_ref(), c.neg_ref(), a.clone()).expect("invertible")
    }

    pub fn apply(&self, x: &SpherePoint) -> SpherePoint {
        let [a, b, c, d] = &self.m;
        match x {
            SpherePoint::Finite(v) => {
                let den = c.mul_ref(v).add_ref(d);
                if den.is_zero() {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(a.mul_ref(v).add_ref(b).mul_ref(&den.inv().expect("nonzero")))
                }
            }
            SpherePoint::Infinity => {
                if c.is_zero() {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(a.mul_ref(&c.inv().expect("nonzero")))
                }
            }
        }
    }

    /// Derivative at a finite point, `det / (cx + d)^2`.
    pub fn derivative_at(&self, x: &Scalar) -> Option<Scalar> {
        let [a, b, c, d] = &self.m;
        let det = a.mul_ref(d).sub_ref(&b.mul_ref(c));
        let den = c.mul_ref(x).add_ref(d);
        den.inv().map(|i| det.mul_ref(&i).mul_ref(&i))
    }

    /// Order as an element of PGL₂, searched up to `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

/// A rational function together with the pole set `S` of the ambient
/// punctured sphere; all poles of the function lie in `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleRationalFunction {
    f: RationalFunction,
    poles: Vec<SpherePoint>,
}

impl PoleRationalFunction {
    pub fn new(f: RationalFunction, poles: Vec<SpherePoint>) -> Result<Self> {
        if poles.is_empty() {
            return Err(Error::Precondition("the pole set must be nonempty".into()));
        }
        let mut rest = f.den().clone();
        for p in &poles {
            if let SpherePoint::Finite(e) = p {
                let lin = Poly::linear_root(e);
                while let Some(q) = rest.div_exact(&lin) {
                    rest = q;
                }
            }
        }
        if rest.degree() != Some(0) {
            return Err(Error::Precondition(format!("{f} has poles outside the pole set")));
        }
        if !poles.contains(&SpherePoint::Infinity) && f.pole_order_at_infinity() > 0 {
            return Err(Error::Precondition(format!("{f} has a pole at infinity")));
        }
        Ok(PoleRationalFunction { f, poles })
    }

    pub fn function(&self) -> &RationalFunction {
        &self.f
    }

    pub fn poles(&self) -> &[SpherePoint] {
        &self.poles
    }

    pub fn parse(s: &str, poles: Vec<SpherePoint>) -> Result<Self> {
        Self::new(RationalFunction::parse(s)?, poles)
    }

    pub fn add(&self, o: &Self) -> Self {
        PoleRationalFunction {
            f: self.f.add(&o.f),
            poles: self.poles.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        PoleRationalFunction {
            f: self.f.mul(&o.f),
            poles: self.poles.clone(),
        }
    }

    pub fn eval(&self, x: &SpherePoint) -> Result<Scalar> {
        if self.poles.contains(x) {
            return Err(Error::Pole(x.to_string()));
        }
        self.f.eval(x).ok_or_else(|| Error::Pole(x.to_string()))
    }
}

impl fmt::Display for PoleRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

/// `(γf)(x) = f(γ⁻¹x)`, with the pole set transported by γ.
pub fn mobius_pullback(f: &PoleRationalFunction, gamma: &crate::Matrix) -> Result<PoleRationalFunction> {
    let g = Mobius::from_matrix(gamma)?;
    let h = g.inverse();
    let poles = f.poles.iter().map(|p| g.apply(p)).collect();
    PoleRationalFunction::new(f.f.compose_mobius(&h), poles)
}
