//! Exact eigenvalues of cyclotomic matrices.
//!
//! Eigenvalues are first located in floating point. A candidate field
//! Q(ζ_M) is then fixed and the eigenvalue's power-basis coordinates are read
//! off from its Galois conjugates, which are eigenvalues of the conjugate
//! matrices. Every candidate is confirmed by an exact rank computation, so
//! floating point only ever proposes.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmath::{euler_phi, Field};
use crate::{Error, Matrix, Result, Scalar};

const CLUSTER_TOL: f64 = 1e-6;
const RATIONAL_TOL: f64 = 1e-7;
const MAX_DENOMINATOR: i64 = 5000;
const MAX_DEGREE: usize = 8;

/// The distinct eigenvalues of `a`, exactly.
pub(crate) fn exact_eigenvalues(a: &Matrix) -> Result<Vec<Scalar>> {
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let entries: Vec<Scalar> = a
        .to_rows()
        .concat()
        .iter()
        .map(|x| x.restrict(x.minimal_order()).expect("minimal order divides"))
        .collect();
    let base = entries.iter().fold(1u32, |l, x| l.lcm(&x.order()));
    let numeric = |k: u32| -> Result<Vec<Complex64>> {
        let m = DMatrix::from_fn(n, n, |r, c| entries[r * n + c].to_complex(k));
        m.eigenvalues()
            .map(|v| v.iter().copied().collect())
            .ok_or_else(|| Error::Internal("eigenvalue iteration did not converge".into()))
    };
    let clusters = cluster(&numeric(1)?);
    let mut out: Vec<Scalar> = Vec::new();
    let mut cache: Vec<(u32, Vec<(u32, Vec<Complex64>)>)> = Vec::new();
    'next: for target in &clusters {
        for field in candidate_orders(base) {
            let conj = match cache.iter().find(|(f, _)| *f == field) {
                Some((_, c)) => c.clone(),
                None => {
                    let c = units(field)
                        .into_iter()
                        .map(|k| numeric(k).map(|e| (k, cluster(&e))))
                        .collect::<Result<Vec<_>>>()?;
                    cache.push((field, c.clone()));
                    c
                }
            };
            if let Some(l) = identify(a, *target, field, &conj) {
                if !out.contains(&l) {
                    out.push(l);
                }
                continue 'next;
            }
        }
        return Err(Error::Unsupported(format!(
            "could not identify the eigenvalue {target} in a small cyclotomic field"
        )));
    }
    Ok(out)
}

fn cluster(vals: &[Complex64]) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    for v in vals {
        if !out.iter().any(|w| (w - v).norm() < CLUSTER_TOL * (1.0 + v.norm())) {
            out.push(*v);
        }
    }
    out
}

fn units(m: u32) -> Vec<u32> {
    (1..=m.max(1)).filter(|k| k.gcd(&m) == 1).collect()
}

/// The unit `-k` modulo `field`, as a representative in `1..=field`.
fn negate(k: u32, field: u32) -> u32 {
    if field <= 2 {
        1
    } else {
        field - k
    }
}

fn candidate_orders(base: u32) -> Vec<u32> {
    let mut out: Vec<u32> = [1, 2, 3, 4, 5, 6, 8, 12]
        .iter()
        .flat_map(|&k| [base * k, base.lcm(&k)])
        .filter(|&m| euler_phi(m) <= MAX_DEGREE)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Tries to write `target` as an element of Q(ζ_field) whose conjugates are
/// eigenvalues of the conjugate matrices, and checks the result exactly.
fn identify(a: &Matrix, target: Complex64, field: u32, conj: &[(u32, Vec<Complex64>)]) -> Option<Scalar> {
    let ks: Vec<u32> = conj.iter().map(|(k, _)| *k).collect();
    let mut assignment: Vec<Option<Complex64>> = vec![None; ks.len()];
    let pos = |k: u32| ks.iter().position(|&x| x == k);
    let first = pos(1)?;
    assignment[first] = Some(target);
    let partner = pos(negate(1, field))?;
    if partner == first {
        if target.im.abs() > CLUSTER_TOL * (1.0 + target.norm()) {
            return None;
        }
    } else {
        assignment[partner] = Some(target.conj());
    }
    let mut found = None;
    search(a, field, &ks, conj, &mut assignment, &mut found);
    found
}

fn search(
    a: &Matrix,
    field: u32,
    ks: &[u32],
    conj: &[(u32, Vec<Complex64>)],
    assignment: &mut Vec<Option<Complex64>>,
    found: &mut Option<Scalar>,
) {
    if found.is_some() {
        return;
    }
    let Some(free) = assignment.iter().position(Option::is_none) else {
        if let Some(l) = solve(field, ks, assignment) {
            let shifted = a.sub(&Matrix::identity(a.rows()).scale(&l));
            if shifted.rank() < a.rows() {
                *found = Some(l);
            }
        }
        return;
    };
    let partner = ks
        .iter()
        .position(|&x| x == negate(ks[free], field))
        .expect("units are closed under negation");
    for v in &conj[free].1 {
        assignment[free] = Some(*v);
        assignment[partner] = Some(v.conj());
        search(a, field, ks, conj, assignment, found);
        assignment[free] = None;
        assignment[partner] = None;
    }
}

/// Solves `Σ_j b_j ω^{jk} = y_k` for rational `b`.
fn solve(field: u32, ks: &[u32], ys: &[Option<Complex64>]) -> Option<Scalar> {
    let phi = ks.len();
    let v = DMatrix::from_fn(phi, phi, |r, j| {
        Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI * (ks[r] as f64) * (j as f64) / field as f64,
        )
    });
    let y = nalgebra::DVector::from_iterator(phi, ys.iter().map(|x| x.expect("assigned")));
    let b = v.lu().solve(&y)?;
    let coeffs = b
        .iter()
        .map(|c| {
            if c.im.abs() > RATIONAL_TOL * (1.0 + c.norm()) {
                None
            } else {
                rationalize(c.re)
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Scalar::from_coeffs(field, coeffs).ok()
}

/// The simplest fraction within tolerance of `x`, by denominator search.
fn rationalize(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    for q in 1..=MAX_DENOMINATOR {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() < RATIONAL_TOL * (1.0 + x.abs()) {
            return Some(BigRational::new((p as i64).into(), q.into()));
        }
    }
    None
}

/// Exact eigenspaces `ker(a - λ)` for the listed eigenvalues.
pub(crate) fn eigenspaces(a: &Matrix, values: &[Scalar]) -> Vec<Vec<Vec<Scalar>>> {
    values
        .iter()
        .map(|l| a.sub(&Matrix::identity(a.rows()).scale(l)).kernel_basis())
        .collect()
}

/// True iff `a` is diagonalisable with the given complete list of eigenvalues.
pub(crate) fn is_semisimple(a: &Matrix, values: &[Scalar]) -> bool {
    eigenspaces(a, values).iter().map(Vec::len).sum::<usize>() == a.rows()
}

/// `Some(q)` if `x / y` is rational.
pub(crate) fn rational_ratio(x: &Scalar, y: &Scalar) -> Option<BigRational> {
    if y.is_zero() {
        return None;
    }
    x.div_ref(y)?.to_rational()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn sorted(mut v: Vec<Scalar>) -> Vec<String> {
        let mut out: Vec<String> = v.drain(..).map(|x| x.to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn rational_spectrum() {
        let a = Matrix::from_rows(vec![vec![s("2"), s("1")], vec![s("0"), s("-1/3")]]).unwrap();
        assert_eq!(sorted(exact_eigenvalues(&a).unwrap()), vec!["-1/3", "2"]);
    }

    #[test]
    fn rotation_has_roots_of_unity() {
        // z -> i z as a real 2x2 matrix.
        let a = Matrix::from_rows(vec![vec![s("0"), s("-1")], vec![s("1"), s("0")]]).unwrap();
        let ev = exact_eigenvalues(&a).unwrap();
        assert_eq!(ev.len(), 2);
        for l in &ev {
            assert_eq!(l.pow(2).unwrap(), s("-1"));
        }
    }

    #[test]
    fn sqrt_three_is_found() {
        // Companion matrix of x^2 - 3, sqrt 3 = zeta12 + zeta12^11.
        let a = Matrix::from_rows(vec![vec![s("0"), s("3")], vec![s("1"), s("0")]]).unwrap();
        let ev = exact_eigenvalues(&a).unwrap();
        assert_eq!(ev.len(), 2);
        for l in &ev {
            assert_eq!(l.mul_ref(l), s("3"));
        }
    }

    #[test]
    fn cyclotomic_diagonal() {
        let a = Matrix::diag(&[s("zeta5"), s("zeta5^2 + 1/2"), s("zeta5")]);
        assert_eq!(
            sorted(exact_eigenvalues(&a).unwrap()),
            sorted(vec![s("zeta5"), s("zeta5^2 + 1/2")])
        );
    }
}
