//! Cartan subalgebras and roots from a regular element fixed by `γ₀`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::recognize::{exact_eigenvalues, is_semisimple, rational_ratio};
use crate::exactmath::{is_zero_vec, vec_scale, Field};
use crate::{Error, LieAlgebra, Matrix, Rational, Result, Scalar, Subspace};

/// Combinations of a fixed-space basis tried before giving up.
pub const REGULAR_SEARCH_BUDGET: usize = 200;

#[derive(Clone, Debug)]
pub struct Root {
    /// Values on the CSA basis.
    pub values: Vec<Scalar>,
    /// `α(x′)`; an integer because `x′` is scaled.
    pub height: i64,
    pub vector: Vec<Scalar>,
    pub positive: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub type_label: String,
    /// The regular element `x′`, scaled so `ad x′` has coprime integer eigenvalues.
    pub regular: Vec<Scalar>,
    pub csa_basis: Vec<Vec<Scalar>>,
    pub roots: Vec<Root>,
    pub simple_roots: Vec<usize>,
    /// Chevalley triples `(E_i, H_i, F_i)` for the simple roots, in order.
    pub e: Vec<Vec<Scalar>>,
    pub h: Vec<Vec<Scalar>>,
    pub f: Vec<Vec<Scalar>>,
    /// `cartan[i][j] = α_j(H_i)`.
    pub cartan: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.csa_basis.len()
    }

    /// Whether the finite type is one whose results are checked against
    /// known examples.
    pub fn is_validated_type(&self) -> bool {
        matches!(self.type_label.as_str(), "A1" | "A2")
    }

    pub fn root_with_values(&self, values: &[Scalar]) -> Option<usize> {
        self.roots.iter().position(|r| r.values == values)
    }
}

/// `λ` with `[h, v] = λ v`, if `v` is an eigenvector of `ad h`.
pub(crate) fn weight(lie: &LieAlgebra, h: &[Scalar], v: &[Scalar]) -> Option<Scalar> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let w = lie.bracket(h, v).ok()?;
    let l = w[p].div_ref(&v[p])?;
    (w == vec_scale(v, &l)).then_some(l)
}

pub(crate) fn integer_weight(lie: &LieAlgebra, h: &[Scalar], v: &[Scalar]) -> Option<i64> {
    let q = weight(lie, h, v)?.to_rational()?;
    q.is_integer().then(|| i64::try_from(q.to_integer()).ok()).flatten()
}

/// Normalises so the first nonzero coordinate is 1.
pub(crate) fn monic(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(p) => vec_scale(v, &p.inv().expect("nonzero")),
        None => v.to_vec(),
    }
}

fn combination(basis: &[Vec<Scalar>], c: &[i64]) -> Vec<Scalar> {
    let n = basis.first().map_or(0, Vec::len);
    let mut out = vec![Scalar::zero(); n];
    for (b, &k) in basis.iter().zip(c) {
        if k != 0 {
            crate::exactmath::axpy(&mut out, &Scalar::int(k), b);
        }
    }
    out
}

/// Unit vectors, the all-ones vector, then a fixed pseudo-random sequence of
/// small integer vectors.
fn candidate_coefficients(d: usize) -> impl Iterator<Item = Vec<i64>> {
    let units = (0..d).map(move |i| (0..d).map(|j| i64::from(i == j)).collect());
    let ones = std::iter::once(vec![1; d]);
    let mixed = (1i64..).map(move |t| (0..d as i64).map(|j| (t * (j + 2) * (j + 2) + j) % 11 - 5).collect());
    units.chain(ones).chain(mixed)
}

/// Rank of a semisimple Lie algebra: the smallest centraliser dimension
/// among a few generic elements.
pub fn lie_rank(lie: &LieAlgebra) -> usize {
    let n = lie.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| crate::exactmath::unit_vec(n, i)).collect();
    candidate_coefficients(n)
        .skip(n + 1)
        .take(4)
        .map(|c| n - lie.ad(&combination(&basis, &c)).rank())
        .min()
        .unwrap_or(0)
}

/// Rescales `x` so `ad x` has coprime integer eigenvalues, if `x` is regular
/// semisimple of the given rank with eigenvalues on a common rational line.
fn scaled_regular(lie: &LieAlgebra, x: &[Scalar], rank: usize) -> Result<Option<Vec<Scalar>>> {
    let n = lie.dim();
    let ad = lie.ad(x);
    if n - ad.rank() != rank {
        return Ok(None);
    }
    let ev = exact_eigenvalues(&ad)?;
    if !is_semisimple(&ad, &ev) {
        return Ok(None);
    }
    let nonzero: Vec<&Scalar> = ev.iter().filter(|l| !l.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(None);
    }
    let reference = if nonzero.iter().all(|l| l.is_rational()) {
        Scalar::one()
    } else {
        let key = |l: &Scalar| {
            let c = l.to_complex(1);
            (c.re, c.im)
        };
        (*nonzero
            .iter()
            .max_by(|a, b| key(a).partial_cmp(&key(b)).expect("finite"))
            .expect("nonempty"))
        .clone()
    };
    let Some(ratios) = nonzero
        .iter()
        .map(|l| rational_ratio(l, &reference))
        .collect::<Option<Vec<Rational>>>()
    else {
        return Ok(None);
    };
    let den = ratios.iter().fold(num_bigint::BigInt::one(), |a, q| a.lcm(q.denom()));
    let num = ratios.iter().fold(num_bigint::BigInt::zero(), |a, q| {
        a.gcd(&(q * Rational::from(den.clone())).to_integer())
    });
    let factor = Scalar::rational(Rational::new(den, num.abs()))
        .div_ref(&reference)
        .expect("nonzero");
    Ok(Some(vec_scale(x, &factor)))
}

/// A regular element of `𝔤^{γ₀}`, scaled so `ad x′` has coprime integer
/// eigenvalues. A `hint` is used instead of searching.
pub fn regular_fixed_element(lie: &LieAlgebra, gamma0: &Matrix, hint: Option<&[Scalar]>) -> Result<Vec<Scalar>> {
    let n = lie.dim();
    let rank = lie_rank(lie);
    if let Some(h) = hint {
        if h.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "regular element needs {n} coordinates"
            )));
        }
        if gamma0.mul_vec(h) != h {
            return Err(Error::Precondition(
                "the given regular element is not fixed by the automorphism".into(),
            ));
        }
        return scaled_regular(lie, h, rank)?
            .ok_or_else(|| Error::Precondition("the given element is not regular semisimple".into()));
    }
    let fixed = gamma0.sub(&Matrix::identity(n)).kernel_basis();
    if fixed.is_empty() {
        return Err(Error::Precondition(
            "the automorphism has no nonzero fixed vectors".into(),
        ));
    }
    let mut tried = 0;
    for c in candidate_coefficients(fixed.len()).take(REGULAR_SEARCH_BUDGET) {
        let x = combination(&fixed, &c);
        if is_zero_vec(&x) {
            continue;
        }
        tried += 1;
        if let Some(y) = scaled_regular(lie, &x, rank)? {
            return Ok(y);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no regular semisimple element among {tried} integer combinations of the {}-dimensional fixed space",
        fixed.len()
    )))
}

/// Splits `space` into joint eigenspaces of `ad h` for the given elements.
/// Returns `(eigenvalues, basis)` pairs.
pub(crate) fn joint_eigenspaces(
    lie: &LieAlgebra,
    space: &[Vec<Scalar>],
    hs: &[Vec<Scalar>],
) -> Result<Vec<(Vec<Scalar>, Vec<Vec<Scalar>>)>> {
    let n = lie.dim();
    let mut parts = vec![(Vec::new(), space.to_vec())];
    for h in hs {
        let ad = lie.ad(h);
        let mut next = Vec::new();
        for (vals, part) in parts {
            let sub = Subspace::span(n, &part);
            let cols = sub
                .basis()
                .iter()
                .map(|b| sub.coordinates(&ad.mul_vec(b)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Internal("subspace is not invariant".into()))?;
            let restricted = Matrix::from_columns(&cols, sub.dim());
            for l in exact_eigenvalues(&restricted)? {
                let ker = restricted.sub(&Matrix::identity(sub.dim()).scale(&l)).kernel_basis();
                let vecs: Vec<Vec<Scalar>> = ker
                    .iter()
                    .map(|c| {
                        let mut v = vec![Scalar::zero(); n];
                        for (b, x) in sub.basis().iter().zip(c) {
                            crate::exactmath::axpy(&mut v, x, b);
                        }
                        v
                    })
                    .collect();
                let mut vals = vals.clone();
                vals.push(l);
                next.push((vals, Subspace::span(n, &vecs).basis().to_vec()));
            }
        }
        parts = next;
    }
    Ok(parts)
}

fn pivot(v: &[Scalar]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

/// Root decomposition with respect to the centraliser of `x`.
pub fn csa_roots(lie: &LieAlgebra, x: &[Scalar]) -> Result<RootDatum> {
    let n = lie.dim();
    let ad = lie.ad(x);
    let csa = Subspace::span(n, &ad.kernel_basis()).basis().to_vec();
    let rank = csa.len();
    let mut heights = Vec::new();
    for l in exact_eigenvalues(&ad)? {
        let q = l.to_rational().filter(|q| q.is_integer()).ok_or_else(|| {
            Error::Precondition(format!(
                "ad x has the eigenvalue {l}; scale x to integer eigenvalues first"
            ))
        })?;
        if !q.is_zero() {
            heights.push(i64::try_from(q.to_integer()).map_err(|_| Error::Unsupported("huge eigenvalue".into()))?);
        }
    }
    heights.sort_unstable();
    let mut roots = Vec::new();
    for &k in &heights {
        let w = ad.sub(&Matrix::identity(n).scale(&Scalar::int(k))).kernel_basis();
        for (values, basis) in joint_eigenspaces(lie, &w, &csa)? {
            if basis.len() != 1 {
                return Err(Error::Internal(format!(
                    "root space of dimension {} at height {k}: the element is not regular",
                    basis.len()
                )));
            }
            roots.push(Root {
                values,
                height: k,
                vector: monic(&basis[0]),
                positive: k > 0,
            });
        }
    }
    if roots.len() + rank != n {
        return Err(Error::Internal(format!(
            "{} roots for rank {rank} in dimension {n}",
            roots.len()
        )));
    }
    roots.sort_by_key(|r| (r.height, pivot(&r.vector)));

    let positive: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].positive).collect();
    let sum = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect::<Vec<_>>();
    let simple_roots: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| {
            !positive.iter().any(|&j| {
                positive
                    .iter()
                    .any(|&k| sum(&roots[j].values, &roots[k].values) == roots[i].values)
            })
        })
        .collect();
    if simple_roots.len() != rank {
        return Err(Error::Internal(format!(
            "{} simple roots for rank {rank}",
            simple_roots.len()
        )));
    }

    let (mut e, mut h, mut f) = (Vec::new(), Vec::new(), Vec::new());
    for &i in &simple_roots {
        let neg: Vec<Scalar> = roots[i].values.iter().map(Field::neg_ref).collect();
        let j = roots
            .iter()
            .position(|r| r.values == neg)
            .ok_or_else(|| Error::Internal("root system is not symmetric".into()))?;
        let ei = roots[i].vector.clone();
        let fj = roots[j].vector.clone();
        let hi = lie.bracket(&ei, &fj)?;
        let c = weight(lie, &hi, &ei)
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("degenerate sl2 triple".into()))?;
        let s = Scalar::int(2).div_ref(&c).expect("nonzero");
        e.push(ei);
        h.push(vec_scale(&hi, &s));
        f.push(vec_scale(&fj, &s));
    }
    let cartan = h
        .iter()
        .map(|hi| {
            e.iter()
                .map(|ej| {
                    integer_weight(lie, hi, ej).ok_or_else(|| Error::Internal("non-integral Cartan entry".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootDatum {
        type_label: finite_type_label(&cartan),
        regular: x.to_vec(),
        csa_basis: csa,
        roots,
        simple_roots,
        e,
        h,
        f,
        cartan,
    })
}

/// `A_N` when the Dynkin diagram is a simply laced path, otherwise a generic
/// rank label.
pub fn finite_type_label(cartan: &[Vec<i64>]) -> String {
    let n = cartan.len();
    let neighbours = |i: usize| (0..n).filter(|&j| j != i && cartan[i][j] != 0).count();
    let simply_laced =
        (0..n).all(|i| (0..n).all(|j| cartan[i][j] == if i == j { 2 } else { cartan[j][i] } && cartan[i][j] >= -1));
    let edges: usize = (0..n).map(neighbours).sum::<usize>() / 2;
    let connected = {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            if n == 0 || seen[i] {
                continue;
            }
            seen[i] = true;
            stack.extend((0..n).filter(|&j| j != i && cartan[i][j] != 0));
        }
        seen.iter().all(|&s| s)
    };
    if n > 0 && simply_laced && connected && edges + 1 == n && (0..n).all(|i| neighbours(i) <= 2) {
        format!("A{n}")
    } else {
        format!("rank {n} Cartan matrix {cartan:?}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSummary {
    pub type_label: String,
    pub rank: usize,
    pub roots: usize,
    pub cartan: Vec<Vec<i64>>,
}

impl From<&RootDatum> for RootSummary {
    fn from(d: &RootDatum) -> Self {
        RootSummary {
            type_label: d.type_label.clone(),
            rank: d.rank(),
            roots: d.roots.len(),
            cartan: d.cartan.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{sl2, sl3};

    #[test]
    fn sl2_from_h() {
        let g = sl2::<Scalar>();
        let h = g
            .coordinates(&Matrix::diag(&[Scalar::int(1), Scalar::int(-1)]))
            .unwrap();
        let x = regular_fixed_element(&g.algebra, &Matrix::identity(3), Some(&h)).unwrap();
        let d = csa_roots(&g.algebra, &x).unwrap();
        assert_eq!(d.type_label, "A1");
        assert_eq!(d.roots.len(), 2);
        assert_eq!(d.cartan, vec![vec![2]]);
        // ad h has eigenvalues ±2, scaled to ±1.
        assert_eq!(d.roots.iter().map(|r| r.height).collect::<Vec<_>>(), vec![-1, 1]);
    }

    #[test]
    fn identity_search_finds_regular_element() {
        for g in [sl2::<Scalar>(), sl3::<Scalar>()] {
            let n = g.algebra.dim();
            let x = regular_fixed_element(&g.algebra, &Matrix::identity(n), None).unwrap();
            let d = csa_roots(&g.algebra, &x).unwrap();
            assert_eq!(d.roots.len() + d.rank(), n);
            assert_eq!(d.rank(), lie_rank(&g.algebra));
        }
    }

    #[test]
    fn sl3_is_a2() {
        let g = sl3::<Scalar>();
        let x = regular_fixed_element(&g.algebra, &Matrix::identity(8), None).unwrap();
        let d = csa_roots(&g.algebra, &x).unwrap();
        assert_eq!(d.type_label, "A2");
        assert_eq!(d.cartan, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn non_path_diagrams_get_generic_labels() {
        assert_eq!(
            finite_type_label(&[vec![2, -1], vec![-2, 2]]),
            "rank 2 Cartan matrix [[2, -1], [-2, 2]]"
        );
        assert_eq!(
            finite_type_label(&[vec![2, 0], vec![0, 2]]),
            "rank 2 Cartan matrix [[2, 0], [0, 2]]"
        );
    }
}
