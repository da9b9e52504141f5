//! The scalar abstraction shared by matrices, polynomials and Lie algebras.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field of characteristic zero.
///
/// The by-reference methods exist because the scalar types used here own heap
/// data; generic code calls them in inner loops to avoid clones.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_rational(q: BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `Some(q)` if the value lies in the prime field.
    fn to_rational(&self) -> Option<BigRational>;

    /// A primitive `n`-th root of unity, when the field contains one.
    fn root_of_unity(n: u32) -> Option<Self>;

    /// Rough size in bits, used to pick pivots during elimination.
    fn height(&self) -> u64;

    /// Parse the textual form produced by `Display`.
    fn parse_scalar(s: &str) -> Result<Self, String>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }
}

pub(crate) fn rational_height(q: &BigRational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

impl Field for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: BigRational) -> Self {
        q
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn root_of_unity(n: u32) -> Option<Self> {
        match n {
            1 => Some(Self::one()),
            2 => Some(-Self::one()),
            _ => None,
        }
    }
    fn height(&self) -> u64 {
        rational_height(self)
    }
    fn parse_scalar(s: &str) -> Result<Self, String> {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, t),
        };
        let q: BigRational = body.parse().map_err(|_| format!("not a rational: {s:?}"))?;
        if q.is_negative() && neg {
            return Err(format!("not a rational: {s:?}"));
        }
        Ok(if neg { -q } else { q })
    }
}
