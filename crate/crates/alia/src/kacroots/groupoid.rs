//! The root groupoid `Φ̄ = (Φ ∪ {0}) / rℤδ` and the cochains `ω¹`, `ω²`.

use std::collections::HashMap;
use std::fmt::Write;

use serde::Serialize;

use super::roots::joint_eigenspaces;
use super::torsion::TorsionFactorization;
use crate::exactmath::Field;
use crate::{Error, Matrix, Result, Scalar};

#[derive(Clone, Debug)]
pub struct GroupoidElement {
    /// Coefficients on `α_0..α_ℓ`, the least nonnegative representative
    /// modulo `rδ`.
    pub coeffs: Vec<i64>,
    /// `μ`-class `l̄ ∈ ℤ/r`.
    pub class: u32,
    /// Values on the coroots `H_0..H_ℓ`.
    pub weight: Vec<i64>,
    /// The basis `A_(α,u)` of the joint eigenspace.
    pub basis: Vec<Vec<Scalar>>,
}

impl GroupoidElement {
    pub fn is_real(&self) -> bool {
        self.weight.iter().any(|&w| w != 0)
    }

    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct AffineRootGroupoid {
    pub elements: Vec<GroupoidElement>,
    pub marks: Vec<i64>,
    pub r: u32,
    pub nu0: u32,
    index: HashMap<Vec<i64>, usize>,
}

impl AffineRootGroupoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The representative of `c + ℤrδ` with all coefficients nonnegative
    /// and as small as possible.
    pub fn reduce(&self, c: &[i64]) -> Vec<i64> {
        let step: Vec<i64> = self.marks.iter().map(|&a| a * self.r as i64).collect();
        let k = c
            .iter()
            .zip(&step)
            .map(|(&x, &d)| (-x).div_euclid(d) + i64::from((-x).rem_euclid(d) != 0))
            .max();
        let k = k.unwrap_or(0);
        c.iter().zip(&step).map(|(&x, &d)| x + k * d).collect()
    }

    pub fn index_of(&self, c: &[i64]) -> Option<usize> {
        self.index.get(&self.reduce(c)).copied()
    }

    /// Index of `α + β` when it lies in `Φ̄`.
    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        let c: Vec<i64> = self.elements[a]
            .coeffs
            .iter()
            .zip(&self.elements[b].coeffs)
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&c)
    }

    /// The image of the simple root `α_j`.
    pub fn simple(&self, j: usize) -> Option<usize> {
        let mut c = vec![0; self.marks.len()];
        c[j] = 1;
        self.index_of(&c)
    }

    pub fn label(&self, i: usize) -> String {
        label_of(&self.elements[i].coeffs)
    }
}

/// `Σ c_i α_i` as text, e.g. `3α0+2α1`.
pub fn label_of(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| match x {
            1 => format!("α{i}"),
            -1 => format!("-α{i}"),
            _ => format!("{x}α{i}"),
        })
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.join("+").replace("+-", "-")
}

fn to_int(x: &Scalar) -> Option<i64> {
    let q = x.to_rational()?;
    q.is_integer().then(|| i64::try_from(q.to_integer()).ok()).flatten()
}

/// Decomposes `𝔤` under `μ` and the coroots `H_0..H_ℓ` and labels each
/// joint eigenspace by its affine root modulo `rδ`.
pub fn root_groupoid(fact: &TorsionFactorization) -> Result<AffineRootGroupoid> {
    let lie = &fact.lie;
    let n = lie.dim();
    let r = fact.r;
    let hs: Vec<Vec<Scalar>> = fact.generators.iter().map(|g| g.h.clone()).collect();
    let classes = fact.classes();
    let marks = fact.marks.clone();
    let cartan = Matrix::from_fn(hs.len(), hs.len(), |i, j| Scalar::int(fact.affine_cartan[i][j]));
    let pivot = marks
        .iter()
        .position(|&a| a == 1)
        .ok_or_else(|| Error::Unsupported("affine diagram without a node of mark 1".into()))?;
    let eps = fact.epsilon();
    let mut g = AffineRootGroupoid {
        elements: Vec::new(),
        marks: marks.clone(),
        r,
        nu0: fact.nu0,
        index: HashMap::new(),
    };

    for class in 0..r {
        let ev = eps.pow(class as i64).expect("root of unity");
        let space = fact.mu.sub(&Matrix::identity(n).scale(&ev)).kernel_basis();
        for (vals, basis) in joint_eigenspaces(lie, &space, &hs)? {
            let weight = vals
                .iter()
                .map(|v| to_int(v).ok_or_else(|| Error::Internal(format!("non-integral coroot value {v}"))))
                .collect::<Result<Vec<_>>>()?;
            let rhs: Vec<Scalar> = weight.iter().map(|&w| Scalar::int(w)).collect();
            let c0 = cartan
                .solve(&rhs)
                .ok_or_else(|| Error::Internal("weight outside the root lattice".into()))?;
            let shift = c0[pivot].clone();
            let mut c = c0
                .iter()
                .zip(&marks)
                .map(|(x, &a)| to_int(&x.sub_ref(&shift.mul_ref(&Scalar::int(a)))))
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::Internal("weight is not an integral combination of simple roots".into()))?;
            let class_of = |c: &[i64]| {
                c.iter()
                    .zip(&classes)
                    .map(|(&x, &l)| x * l as i64)
                    .sum::<i64>()
                    .rem_euclid(r as i64)
            };
            let mut tries = 0;
            while class_of(&c) != class as i64 {
                c.iter_mut().zip(&marks).for_each(|(x, &a)| *x += a);
                tries += 1;
                if tries > r {
                    return Err(Error::Internal("δ does not generate the diagram classes".into()));
                }
            }
            let coeffs = g.reduce(&c);
            if g.index.contains_key(&coeffs) {
                return Err(Error::Internal(format!(
                    "two weight spaces labelled {}",
                    label_of(&coeffs)
                )));
            }
            g.index.insert(coeffs.clone(), usize::MAX);
            g.elements.push(GroupoidElement {
                coeffs,
                class,
                weight,
                basis,
            });
        }
    }
    g.elements
        .sort_by_key(|e| (e.coeffs.iter().sum::<i64>(), e.coeffs.clone()));
    g.index = g
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.coeffs.clone(), i))
        .collect();

    let ell = fact.generators.len() - 1;
    let big_n = fact.datum.rank();
    for e in &g.elements {
        let expected = if e.is_real() {
            1
        } else if e.class == 0 {
            ell
        } else {
            (big_n - ell) / (r as usize - 1)
        };
        if e.multiplicity() != expected {
            return Err(Error::Internal(format!(
                "{} has multiplicity {} instead of {expected}",
                label_of(&e.coeffs),
                e.multiplicity()
            )));
        }
    }
    Ok(g)
}

/// `ω¹(Σ c_i α_i) = Σ c_i s_i mod ν₀` for every element.
pub fn omega1(g: &AffineRootGroupoid, s: &[u32]) -> Vec<u32> {
    let nu0 = g.nu0 as i64;
    g.elements
        .iter()
        .map(|e| {
            e.coeffs
                .iter()
                .zip(s)
                .map(|(&c, &x)| c * x as i64)
                .sum::<i64>()
                .rem_euclid(nu0) as u32
        })
        .collect()
}

/// `ω²(α, β)` on every composable ordered pair, as `(α, β, α+β, value)`.
pub fn omega2(g: &AffineRootGroupoid, w1: &[u32]) -> Result<Vec<(usize, usize, usize, u32)>> {
    let mut out = Vec::new();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let Some(c) = g.add(a, b) else { continue };
            let num = w1[a] as i64 + w1[b] as i64 - w1[c] as i64;
            let value = match num {
                0 => 0,
                x if x == g.nu0 as i64 => 1,
                _ => {
                    return Err(Error::Internal(format!(
                        "ω¹ is not additive on ({}, {})",
                        g.label(a),
                        g.label(b)
                    )))
                }
            };
            out.push((a, b, c, value));
        }
    }
    Ok(out)
}

/// The 2-cocycle identity on every triple where all terms are defined.
pub fn is_cocycle(g: &AffineRootGroupoid, w2: &[(usize, usize, usize, u32)]) -> bool {
    let table: HashMap<(usize, usize), u32> = w2.iter().map(|&(a, b, _, v)| ((a, b), v)).collect();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let Some(ab) = g.add(a, b) else { continue };
            for c in 0..g.len() {
                let (Some(bc), Some(_)) = (g.add(b, c), g.add(ab, c)) else {
                    continue;
                };
                if g.add(a, bc).is_none() {
                    continue;
                }
                if table[&(a, b)] + table[&(ab, c)] != table[&(b, c)] + table[&(a, bc)] {
                    return false;
                }
            }
        }
    }
    true
}

/// Unordered pairs `{α, β}` with `ω²(α, β) = 1`, as index pairs `a ≤ b`.
pub fn omega2_edges(w2: &[(usize, usize, usize, u32)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = w2
        .iter()
        .filter(|t| t.3 != 0 && t.0 <= t.1)
        .map(|t| (t.0, t.1))
        .collect();
    out.sort_unstable();
    out
}

/// Graphviz text: one vertex per element, labelled with its `ω¹` value,
/// and one edge per unordered pair with `ω² ≠ 0`.
pub fn omega2_dot(g: &AffineRootGroupoid, w1: &[u32], w2: &[(usize, usize, usize, u32)]) -> String {
    let mut out = String::from("graph omega2 {\n");
    for (i, w) in w1.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{} ({w})\"];", g.label(i));
    }
    for (a, b) in omega2_edges(w2) {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Omega1Entry {
    pub element: String,
    pub coeffs: Vec<i64>,
    pub class: u32,
    pub multiplicity: usize,
    /// From the Kac coordinates.
    pub omega1: u32,
    /// From the eigenvalues of `γ₀` on the unnormalised generators.
    pub omega1_raw: u32,
}

pub fn omega1_table(g: &AffineRootGroupoid, w1: &[u32], raw: &[u32]) -> Vec<Omega1Entry> {
    g.elements
        .iter()
        .enumerate()
        .map(|(i, e)| Omega1Entry {
            element: g.label(i),
            coeffs: e.coeffs.clone(),
            class: e.class,
            multiplicity: e.multiplicity(),
            omega1: w1[i],
            omega1_raw: raw[i],
        })
        .collect()
}
