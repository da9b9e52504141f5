//! Truncated twisted current algebras written in the root groupoid basis.

use std::collections::HashMap;

use num_traits::Zero;

use super::groupoid::{omega1, AffineRootGroupoid};
use super::torsion::TorsionFactorization;
use crate::exactmath::{is_zero_vec, vec_scale};
use crate::{Error, LieAlgebra, Result, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBasisElement {
    pub element: usize,
    pub u: usize,
    pub i: usize,
    /// `iν₀ + ω¹(α)`.
    pub exponent: usize,
}

#[derive(Clone, Debug)]
pub struct LocalStructure {
    pub algebra: LieAlgebra,
    pub basis: Vec<LocalBasisElement>,
    /// `ω¹` from the actual eigenvalues of `γ₀`.
    pub omega1: Vec<u32>,
    /// The vectors `A_(α,u)` grouped by `ω¹`, in basis order.
    pub eigenbases: Vec<Vec<Vec<Scalar>>>,
}

/// Builds `a^i_(α,u) = A_(α,u) ⊗ z^{iν₀+ω¹(α)}` with the bracket
/// `[a^i, a^j] = δ Σ C a^{i+j+ω²}` truncated at `z^m`.
pub fn local_structure(fact: &TorsionFactorization, g: &AffineRootGroupoid, m: usize) -> Result<LocalStructure> {
    let lie = &fact.lie;
    let n = lie.dim();
    let nu0 = fact.nu0 as usize;
    let w1 = omega1(g, &fact.raw_exponents());
    for (idx, (e, &w)) in g.elements.iter().zip(&w1).enumerate() {
        let z = fact.zeta.pow(w as i64).expect("root of unity");
        for a in &e.basis {
            if fact.gamma0.mul_vec(a) != vec_scale(a, &z) {
                return Err(Error::Internal(format!(
                    "γ₀ does not act on the {} space by ζ^{w}",
                    g.label(idx)
                )));
            }
        }
    }
    let mut eigenbases = vec![Vec::new(); nu0];
    for (e, &w) in g.elements.iter().zip(&w1) {
        eigenbases[w as usize].extend(e.basis.iter().cloned());
    }

    let mut basis = Vec::new();
    for k in 0..m {
        for (idx, e) in g.elements.iter().enumerate() {
            if w1[idx] as usize != k % nu0 {
                continue;
            }
            for u in 0..e.multiplicity() {
                basis.push(LocalBasisElement {
                    element: idx,
                    u,
                    i: k / nu0,
                    exponent: k,
                });
            }
        }
    }
    let position: HashMap<(usize, usize, usize), usize> = basis
        .iter()
        .enumerate()
        .map(|(p, b)| ((b.element, b.u, b.i), p))
        .collect();

    // C[(a, b)] = (α+β, ω²(α, β), coordinates of [A_(α,u), A_(β,v)] per (u, v)).
    type Constants = (usize, usize, Vec<Vec<Vec<Scalar>>>);
    let mut constants: HashMap<(usize, usize), Constants> = HashMap::new();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let (ea, eb) = (&g.elements[a], &g.elements[b]);
            let sum = g.add(a, b);
            let target = sum.map(|c| Subspace::span(n, &g.elements[c].basis));
            let mut table = Vec::new();
            for x in &ea.basis {
                let mut row = Vec::new();
                for y in &eb.basis {
                    let br = lie.bracket(x, y)?;
                    match &target {
                        Some(t) => row.push(t.coordinates(&br).ok_or_else(|| {
                            Error::Internal(format!("[{}, {}] leaves its weight space", g.label(a), g.label(b)))
                        })?),
                        None if is_zero_vec(&br) => row.push(Vec::new()),
                        None => {
                            return Err(Error::Internal(format!(
                                "[{}, {}] is nonzero outside the groupoid",
                                g.label(a),
                                g.label(b)
                            )))
                        }
                    }
                }
                table.push(row);
            }
            if let Some(c) = sum {
                let num = w1[a] as usize + w1[b] as usize - w1[c] as usize;
                constants.insert((a, b), (c, num / nu0, table));
            }
        }
    }

    let labels = basis
        .iter()
        .map(|b| {
            let mult = g.elements[b.element].multiplicity();
            let u = if mult > 1 {
                format!("#{}", b.u + 1)
            } else {
                String::new()
            };
            format!("{}{u}@z^{}", g.label(b.element), b.exponent)
        })
        .collect();
    let grading = Some(basis.iter().map(|b| b.exponent as i64).collect());
    let algebra = LieAlgebra::from_bracket_fn(labels, grading, |p, q| {
        let mut out = vec![Scalar::zero(); basis.len()];
        let (x, y) = (&basis[p], &basis[q]);
        let Some((c, w2, table)) = constants.get(&(x.element, y.element)) else {
            return out;
        };
        let i = x.i + y.i + w2;
        if i * nu0 + w1[*c] as usize >= m {
            return out;
        }
        for (w, coef) in table[x.u][y.u].iter().enumerate() {
            if !coef.is_zero() {
                out[position[&(*c, w, i)]] = coef.clone();
            }
        }
        out
    })?;
    Ok(LocalStructure {
        algebra,
        basis,
        omega1: w1,
        eigenbases,
    })
}

/// True iff the two algebras have identical structure constants in their
/// given bases.
pub fn same_structure_constants(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (i + 1..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}
