//! Dense univariate polynomials over an exact field.

use crate::exactmath::Field;

/// A polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `x - a`.
    pub fn linear_root(a: &F) -> Self {
        Self::new(vec![a.neg_ref(), F::one()])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add_ref(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub_ref(&o.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].mul_ref(&lead_inv);
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(dj));
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    /// Exact quotient if `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero")),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&F::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Coefficients of `p(x0 + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, x0: &F) -> Self {
        // Repeated synthetic division.
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let t = c[k + 1].mul_ref(x0);
                c[k] = c[k].add_ref(&t);
            }
        }
        Self::new(c)
    }

    /// `Σ p_k u^k w^{n-k}` for polynomials `u, w` and `n >= deg p`.
    pub fn homogenized_compose(&self, u: &Self, w: &Self, n: usize) -> Self {
        let mut upow = vec![Self::one()];
        let mut wpow = vec![Self::one()];
        for k in 1..=n {
            upow.push(upow[k - 1].mul(u));
            wpow.push(wpow[k - 1].mul(w));
        }
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&upow[k].mul(&wpow[n - k]).scale(c));
            }
        }
        acc
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear_root(a);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            k += 1;
        }
        k
    }
}

/// Truncated power series helpers; a series is a coefficient vector.
pub mod series {
    use crate::exactmath::Field;

    pub fn mul<F: Field>(a: &[F], b: &[F], m: usize) -> Vec<F> {
        let mut out = vec![F::zero(); m];
        for (i, x) in a.iter().enumerate().take(m) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(m - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
                }
            }
        }
        out
    }

    /// Inverse of a series with invertible constant term.
    pub fn inv<F: Field>(a: &[F], m: usize) -> Option<Vec<F>> {
        let a0inv = a.first()?.inv()?;
        let mut out = vec![F::zero(); m];
        if m == 0 {
            return Some(out);
        }
        out[0] = a0inv.clone();
        for k in 1..m {
            let mut acc = F::zero();
            for j in 1..=k.min(a.len() - 1) {
                acc = acc.add_ref(&a[j].mul_ref(&out[k - j]));
            }
            out[k] = acc.mul_ref(&a0inv).neg_ref();
        }
        Some(out)
    }

    pub fn truncate<F: Field>(a: &[F], m: usize) -> Vec<F> {
        (0..m).map(|k| a.get(k).cloned().unwrap_or_else(F::zero)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(xs: &[i64]) -> Poly<BigRational> {
        Poly::new(xs.iter().map(|&x| BigRational::from_i64(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.div_exact(&b).unwrap(), p(&[-1, 1]));
        assert_eq!(a.gcd(&p(&[-1, 1]).mul(&p(&[2, 1]))), p(&[-1, 1]));
        assert_eq!(a.root_multiplicity(&BigRational::from_i64(1)), 1);
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        // (2 + t)^2 = 4 + 4t + t^2
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.taylor_shift(&BigRational::from_i64(2)), p(&[4, 4, 1]));
    }

    #[test]
    fn series_inverse() {
        let a = vec![BigRational::from_i64(1), BigRational::from_i64(-1)];
        let inv = series::inv(&a, 4).unwrap();
        assert!(inv.iter().all(|c| c == &BigRational::from_i64(1)));
    }
}
