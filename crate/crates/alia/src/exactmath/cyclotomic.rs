//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` reduced
//! modulo the n-th cyclotomic polynomial. Binary operations on elements of
//! different orders first embed both operands into Q(ζ_lcm).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{rational_height, Field};
use super::syntax::{parse_expr, ExprTarget};
use crate::Error as MathError;

/// Precomputed data for one cyclotomic field.
#[derive(Debug)]
pub(crate) struct CycloCtx {
    order: u32,
    phi: usize,
    /// `powers[k]` is ζ^k in the power basis, for `0 <= k < order`.
    powers: Vec<Vec<BigInt>>,
}

fn int_poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    q
}

/// Coefficients (ascending) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = int_poly_divexact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl CycloCtx {
    fn build(order: u32) -> CycloCtx {
        let phi_poly = cyclotomic_polynomial(order);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for j in (1..phi).rev() {
                next[j] = cur[j - 1].clone();
            }
            if !top.is_zero() {
                for j in 0..phi {
                    next[j] -= &top * &phi_poly[j];
                }
            }
            cur = next;
        }
        CycloCtx { order, phi, powers }
    }
}

fn ctx(order: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloCtx::build(order)))
        .clone()
}

/// An element of Q(ζ_n).
#[derive(Clone)]
pub struct Cyc {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    /// The element with the given power-basis coordinates.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Result<Cyc, MathError> {
        if order == 0 {
            return Err(MathError::IncompatibleField("order 0".into()));
        }
        let ctx = ctx(order);
        if coeffs.len() != ctx.phi {
            return Err(MathError::IncompatibleField(format!(
                "Q(zeta{order}) needs {} coordinates, got {}",
                ctx.phi,
                coeffs.len()
            )));
        }
        Ok(Cyc { ctx, coeffs })
    }

    pub fn rational(q: BigRational) -> Cyc {
        Cyc {
            ctx: ctx(1),
            coeffs: vec![q],
        }
    }

    pub fn int(n: i64) -> Cyc {
        Cyc::rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Cyc {
        Cyc::rational(BigRational::new(n.into(), d.into()))
    }

    /// ζ_n^k.
    pub fn zeta_pow(order: u32, k: i64) -> Cyc {
        let ctx = ctx(order);
        let e = k.rem_euclid(order as i64) as usize;
        let coeffs = ctx.powers[e]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Cyc { ctx, coeffs }
    }

    /// The standard primitive root ζ_n = exp(2πi/n).
    pub fn zeta(order: u32) -> Cyc {
        Cyc::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// View this element inside Q(ζ_new_order).
    pub fn field_embed(&self, new_order: u32) -> Result<Cyc, MathError> {
        let n = self.ctx.order;
        if new_order == 0 || new_order % n != 0 {
            return Err(MathError::IncompatibleField(format!(
                "cannot embed Q(zeta{n}) into Q(zeta{new_order})"
            )));
        }
        if new_order == n {
            return Ok(self.clone());
        }
        let target = ctx(new_order);
        let step = (new_order / n) as usize;
        let mut coeffs = vec![BigRational::zero(); target.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j == 0 {
                coeffs[0] += c;
                continue;
            }
            for (t, p) in target.powers[j * step].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[t] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        Ok(Cyc { ctx: target, coeffs })
    }

    /// Smallest order `d` dividing the current order such that the element
    /// lies in Q(ζ_d).
    pub fn minimal_order(&self) -> u32 {
        let n = self.ctx.order;
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            if self.restrict(d).is_some() {
                return d;
            }
        }
        n
    }

    /// Express the element in Q(ζ_d) if it lies there.
    pub fn restrict(&self, d: u32) -> Option<Cyc> {
        let n = self.ctx.order;
        if d == n {
            return Some(self.clone());
        }
        if n % d != 0 {
            return None;
        }
        if self.is_rational() {
            let mut coeffs = vec![BigRational::zero(); ctx(d).phi];
            coeffs[0] = self.coeffs[0].clone();
            return Some(Cyc { ctx: ctx(d), coeffs });
        }
        // Solve for coordinates in Q(ζ_d) via the embedding matrix.
        let small = ctx(d);
        let step = (n / d) as usize;
        let cols: Vec<Vec<BigRational>> = (0..small.phi)
            .map(|j| {
                self.ctx.powers[j * step]
                    .iter()
                    .map(|p| BigRational::from_integer(p.clone()))
                    .collect()
            })
            .collect();
        let m = super::matrix::ExactMatrix::from_fn(self.ctx.phi, small.phi, |r, c| cols[c][r].clone());
        let x = m.solve(&self.coeffs)?;
        Some(Cyc { ctx: small, coeffs: x })
    }

    fn unify<'a>(a: &'a Cyc, b: &'a Cyc) -> (std::borrow::Cow<'a, Cyc>, std::borrow::Cow<'a, Cyc>) {
        use std::borrow::Cow;
        let (n, m) = (a.ctx.order, b.ctx.order);
        if n == m {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let l = n.lcm(&m);
        let ea = if n == l {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.field_embed(l).expect("lcm"))
        };
        let eb = if m == l {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.field_embed(l).expect("lcm"))
        };
        (ea, eb)
    }

    fn mul_same(&self, rhs: &Cyc) -> Cyc {
        let phi = self.ctx.phi;
        if phi == 1 {
            return Cyc {
                ctx: self.ctx.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        if rhs.is_rational() {
            let s = &rhs.coeffs[0];
            return Cyc {
                ctx: self.ctx.clone(),
                coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        if self.is_rational() {
            let s = &self.coeffs[0];
            return Cyc {
                ctx: self.ctx.clone(),
                coeffs: rhs.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (t, p) in self.ctx.powers[k % self.ctx.order as usize].iter().enumerate() {
                if !p.is_zero() {
                    out[t] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        Cyc {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    fn inverse(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            let mut coeffs = vec![BigRational::zero(); self.ctx.phi];
            coeffs[0] = self.coeffs[0].recip();
            return Some(Cyc {
                ctx: self.ctx.clone(),
                coeffs,
            });
        }
        // Solve (multiplication by self) * x = 1.
        let phi = self.ctx.phi;
        let basis: Vec<Cyc> = (0..phi)
            .map(|j| {
                let mut c = vec![BigRational::zero(); phi];
                c[j] = BigRational::one();
                self.mul_same(&Cyc {
                    ctx: self.ctx.clone(),
                    coeffs: c,
                })
            })
            .collect();
        let m = super::matrix::ExactMatrix::from_fn(phi, phi, |r, c| basis[c].coeffs[r].clone());
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let x = m.solve(&rhs)?;
        Some(Cyc {
            ctx: self.ctx.clone(),
            coeffs: x,
        })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Option<Cyc> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        Some(acc)
    }

    /// The multiplicative order if this is a root of unity in its field.
    pub fn root_order(&self) -> Option<u32> {
        let n = self.ctx.order;
        let bound = 2 * n.max(2);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul_ref(self);
        }
        None
    }

    /// `k` with `self == ζ^k` for the given primitive root `zeta` of order `nu`.
    pub fn discrete_log(&self, zeta: &Cyc, nu: u32) -> Option<u32> {
        let mut acc = Cyc::one();
        for k in 0..nu {
            if &acc == self {
                return Some(k);
            }
            acc = acc.mul_ref(zeta);
        }
        None
    }

    /// Complex value of the element under ζ_n ↦ exp(2πik/n).
    pub fn to_complex(&self, k: u32) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        let n = self.ctx.order as f64;
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / n;
            acc += num_complex::Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle);
        }
        acc
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ctx.order;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match j {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "zeta{n}")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        let (a, b) = Cyc::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyc {}

impl Zero for Cyc {
    fn zero() -> Cyc {
        Cyc::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyc {
    fn one() -> Cyc {
        Cyc::rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.is_rational()
    }
}

impl Field for Cyc {
    fn add_ref(&self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::unify(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyc {
            ctx: a.ctx.clone(),
            coeffs,
        }
    }
    fn sub_ref(&self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::unify(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyc {
            ctx: a.ctx.clone(),
            coeffs,
        }
    }
    fn mul_ref(&self, rhs: &Cyc) -> Cyc {
        if self.ctx.order != rhs.ctx.order {
            if self.is_rational() && self.ctx.order == 1 {
                let s = &self.coeffs[0];
                return Cyc {
                    ctx: rhs.ctx.clone(),
                    coeffs: rhs.coeffs.iter().map(|c| c * s).collect(),
                };
            }
            if rhs.is_rational() && rhs.ctx.order == 1 {
                let s = &rhs.coeffs[0];
                return Cyc {
                    ctx: self.ctx.clone(),
                    coeffs: self.coeffs.iter().map(|c| c * s).collect(),
                };
            }
        }
        let (a, b) = Cyc::unify(self, rhs);
        a.mul_same(&b)
    }
    fn neg_ref(&self) -> Cyc {
        Cyc {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Option<Cyc> {
        self.inverse()
    }
    fn from_rational(q: BigRational) -> Cyc {
        Cyc::rational(q)
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }
    fn root_of_unity(n: u32) -> Option<Cyc> {
        Some(Cyc::zeta(n))
    }
    fn height(&self) -> u64 {
        self.coeffs.iter().map(rational_height).sum()
    }
    fn parse_scalar(s: &str) -> Result<Cyc, String> {
        parse_expr(s)?.eval::<Cyc>()
    }
}

impl ExprTarget for Cyc {
    fn int(n: &BigInt) -> Cyc {
        Cyc::rational(BigRational::from_integer(n.clone()))
    }
    fn var() -> Result<Cyc, String> {
        Err("the variable z is not allowed in a scalar".into())
    }
    fn zeta(n: u32) -> Result<Cyc, String> {
        Ok(Cyc::zeta(n))
    }
    fn add(self, o: Cyc) -> Cyc {
        self.add_ref(&o)
    }
    fn sub(self, o: Cyc) -> Cyc {
        self.sub_ref(&o)
    }
    fn mul(self, o: Cyc) -> Cyc {
        self.mul_ref(&o)
    }
    fn div(self, o: Cyc) -> Result<Cyc, String> {
        self.div_ref(&o).ok_or_else(|| "division by zero".to_string())
    }
    fn neg(self) -> Cyc {
        self.neg_ref()
    }
    fn pow(self, e: i64) -> Result<Cyc, String> {
        Cyc::pow(&self, e).ok_or_else(|| "zero to a negative power".to_string())
    }
}

impl FromStr for Cyc {
    type Err = String;
    fn from_str(s: &str) -> Result<Cyc, String> {
        Cyc::parse_scalar(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                self.$inner(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyc> for &'a Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &'a Cyc) -> Cyc {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div for Cyc {
    type Output = Cyc;
    fn div(self, rhs: Cyc) -> Cyc {
        self.div_ref(&rhs).expect("division by zero")
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        self.neg_ref()
    }
}

impl From<i64> for Cyc {
    fn from(n: i64) -> Cyc {
        Cyc::int(n)
    }
}
