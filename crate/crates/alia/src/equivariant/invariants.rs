//! Invariants `(𝔤 ⊗ O_X)^Γ` in a pole-order filtration, and their jets.

use num_traits::Zero;

use super::action::GroupAction;
use super::space::FunctionSpace;
use crate::exactmath::{sparse_axpy, sparse_to_dense, ExactMatrix, Field, SparseEchelon, SparseVec, Subspace};
use crate::funring::{Chart, PoleRationalFunction, RationalFunction, SpherePoint};
use crate::{Error, Matrix, Result, Scalar};

/// A finite sum `Σ A_i ⊗ f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantElement {
    pub terms: Vec<(Vec<Scalar>, PoleRationalFunction)>,
}

impl EquivariantElement {
    /// Component functions: the element as a 𝔤-valued function.
    pub fn components(&self, n: usize) -> Vec<RationalFunction> {
        let mut out = vec![RationalFunction::zero(); n];
        for (a, f) in &self.terms {
            for (i, c) in a.iter().enumerate() {
                if !c.is_zero() {
                    out[i] = out[i].add(&f.function().scale(c));
                }
            }
        }
        out
    }

    /// `Σ γA ⊗ γf = Σ A ⊗ f` for every group element.
    pub fn is_invariant(&self, action: &GroupAction) -> bool {
        let n = action.lie().dim();
        let comps = self.components(n);
        action.elements().iter().all(|g| {
            let inv = g.mobius.inverse();
            let moved: Vec<RationalFunction> = comps.iter().map(|f| f.compose_mobius(&inv)).collect();
            (0..n).all(|r| {
                let mut acc = RationalFunction::zero();
                for (c, f) in moved.iter().enumerate() {
                    let x = g.lie.get(r, c);
                    if !x.is_zero() {
                        acc = acc.add(&f.scale(x));
                    }
                }
                acc == comps[r]
            })
        })
    }

    /// Pointwise bracket, returned with one term per basis vector of 𝔤.
    pub fn bracket(&self, o: &Self, action: &GroupAction) -> Result<Self> {
        let lie = action.lie();
        let n = lie.dim();
        let (f, g) = (self.components(n), o.components(n));
        let mut out = vec![RationalFunction::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if f[i].is_zero() || g[j].is_zero() {
                    continue;
                }
                let prod = f[i].mul(&g[j]);
                for (k, c) in lie.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&prod.scale(c));
                    }
                }
            }
        }
        let terms = out
            .into_iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero())
            .map(|(k, f)| {
                let mut e = vec![Scalar::zero(); n];
                e[k] = num_traits::One::one();
                Ok((e, PoleRationalFunction::new(f, action.poles().to_vec())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivariantElement { terms })
    }
}

/// `ev_X(Σ A_i ⊗ f_i) = (Σ f_i(x) A_i)_x`, asserting the values are fixed by
/// the stabiliser of each point.
pub fn point_evaluation(action: &GroupAction, a: &EquivariantElement, xs: &[SpherePoint]) -> Result<Vec<Vec<Scalar>>> {
    let n = action.lie().dim();
    let comps = a.components(n);
    let mut out = Vec::with_capacity(xs.len());
    for x in xs {
        if action.poles().contains(x) {
            return Err(Error::Pole(x.to_string()));
        }
        let v = comps
            .iter()
            .map(|f| f.eval(x).ok_or_else(|| Error::Pole(x.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let st = action.stabilizer(x)?;
        for &g in &st.members {
            if action.elements()[g].lie.mul_vec(&v) != v {
                return Err(Error::Internal(format!(
                    "evaluation at {x} is not fixed by its stabiliser"
                )));
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Basis of the invariants of `𝔤 ⊗ F_D`, nested by pole order.
///
/// Coordinates on `𝔤 ⊗ F_D` are indexed by `j * dim 𝔤 + i` for function
/// `j` and Lie basis vector `i`.
#[derive(Clone, Debug)]
pub struct FilteredALiA {
    action: GroupAction,
    space: FunctionSpace,
    elements: Vec<SparseVec<Scalar>>,
    element_degrees: Vec<usize>,
    echelon: SparseEchelon<Scalar>,
}

/// Reynolds averages of `e_i ⊗ φ_j`, in the `j * n + i` indexing.
pub(crate) struct Reynolds {
    n: usize,
    actions: Vec<Matrix>,
    lies: Vec<Matrix>,
}

impl Reynolds {
    pub(crate) fn new(action: &GroupAction, space: &FunctionSpace) -> Result<Self> {
        let actions = action
            .elements()
            .iter()
            .map(|g| space.action_matrix(&g.mobius))
            .collect::<Result<Vec<_>>>()?;
        let lies = action.elements().iter().map(|g| g.lie.clone()).collect();
        Ok(Reynolds {
            n: action.lie().dim(),
            actions,
            lies,
        })
    }

    pub(crate) fn image(&self, i: usize, j: usize) -> SparseVec<Scalar> {
        let mut out = SparseVec::new();
        let w = Scalar::ratio(1, self.actions.len() as i64);
        for (fa, la) in self.actions.iter().zip(&self.lies) {
            for jj in 0..fa.rows() {
                let fc = fa.get(jj, j);
                if fc.is_zero() {
                    continue;
                }
                let coef = fc.mul_ref(&w);
                let mut term = SparseVec::new();
                for ii in 0..self.n {
                    let lc = la.get(ii, i);
                    if !lc.is_zero() {
                        term.insert(jj * self.n + ii, lc.clone());
                    }
                }
                sparse_axpy(&mut out, &coef, &term);
            }
        }
        out
    }
}

impl FilteredALiA {
    /// Invariants with pole orders at most `degree`, processed by increasing
    /// pole order so that `degree_count(d)` is nested in `d`.
    pub fn new(action: &GroupAction, degree: usize) -> Result<Self> {
        let space = FunctionSpace::new(action.poles(), degree)?;
        let rey = Reynolds::new(action, &space)?;
        let n = action.lie().dim();
        let mut echelon = SparseEchelon::new();
        let mut elements = Vec::new();
        let mut element_degrees = Vec::new();
        for j in 0..space.dim() {
            for i in 0..n {
                let v = rey.image(i, j);
                if echelon.insert(v.clone()) {
                    elements.push(v);
                    element_degrees.push(space.degree_of(j));
                }
            }
        }
        Ok(FilteredALiA {
            action: action.clone(),
            space,
            elements,
            element_degrees,
            echelon,
        })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn space(&self) -> &FunctionSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.dim() * self.action.lie().dim()
    }

    /// Number of basis elements of pole order at most `d`.
    pub fn degree_count(&self, d: usize) -> usize {
        self.element_degrees.iter().take_while(|&&k| k <= d).count()
    }

    pub fn element_degree(&self, k: usize) -> usize {
        self.element_degrees[k]
    }

    pub fn vector(&self, k: usize) -> Vec<Scalar> {
        sparse_to_dense(&self.elements[k], self.ambient_dim())
    }

    /// Embeds `Σ A ⊗ f` into `𝔤 ⊗ F_D`.
    pub fn embed(&self, a: &EquivariantElement) -> Result<Vec<Scalar>> {
        let n = self.action.lie().dim();
        let mut out = vec![Scalar::zero(); self.ambient_dim()];
        for (v, f) in &a.terms {
            let c = self.space.coordinates(f.function())?;
            for (j, cj) in c.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        out[j * n + i] = out[j * n + i].add_ref(&cj.mul_ref(vi));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn element(&self, k: usize) -> EquivariantElement {
        self.element_of(&self.vector(k))
    }

    pub fn element_of(&self, v: &[Scalar]) -> EquivariantElement {
        let n = self.action.lie().dim();
        let terms = (0..self.space.dim())
            .filter_map(|j| {
                let a: Vec<Scalar> = v[j * n..(j + 1) * n].to_vec();
                if a.iter().all(Zero::is_zero) {
                    return None;
                }
                let f = PoleRationalFunction::new(self.space.basis()[j].clone(), self.action.poles().to_vec())
                    .expect("basis functions have allowed poles");
                Some((a, f))
            })
            .collect();
        EquivariantElement { terms }
    }

    /// Coordinates of an invariant with respect to the stored basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = (0..self.len()).map(|k| self.vector(k)).collect();
        ExactMatrix::from_columns(&cols, self.ambient_dim()).solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon.contains(&crate::exactmath::sparse_from_dense(v))
    }

    /// Subspace of invariant coordinates spanned by the given elements.
    pub fn span_of(&self, vs: &[Vec<Scalar>]) -> Result<Subspace<Scalar>> {
        let coords = vs
            .iter()
            .map(|v| {
                self.coordinates(v)
                    .ok_or_else(|| Error::Precondition("element is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.len(), &coords))
    }

    /// A subspace of invariant coordinates, as vectors in `𝔤 ⊗ F_D`.
    pub fn ambient_subspace(&self, s: &Subspace<Scalar>) -> Subspace<Scalar> {
        let vs: Vec<Vec<Scalar>> = s
            .basis()
            .iter()
            .map(|c| {
                let mut acc = SparseVec::new();
                for (k, x) in c.iter().enumerate() {
                    if !x.is_zero() {
                        sparse_axpy(&mut acc, x, &self.elements[k]);
                    }
                }
                sparse_to_dense(&acc, self.ambient_dim())
            })
            .collect();
        Subspace::span(self.ambient_dim(), &vs)
    }

    /// Jets in the chart at `x0` of every basis function, `m` coefficients each.
    fn function_jets(&self, chart: &Chart, m: usize) -> Result<Vec<Vec<Scalar>>> {
        self.space.basis().iter().map(|f| chart.jet(f, m)).collect()
    }

    /// Matrix of `id ⊗ J^m_{x0}` on the invariant basis; rows are indexed by
    /// `k * dim 𝔤 + i` for the coefficient of `t^k`.
    pub fn jet_matrix(&self, x0: &SpherePoint, m: usize) -> Result<Matrix> {
        let (_, chart) = self.action.local_chart(x0)?;
        self.jet_matrix_in(&chart, m)
    }

    fn jet_matrix_in(&self, chart: &Chart, m: usize) -> Result<Matrix> {
        let n = self.action.lie().dim();
        let jets = self.function_jets(chart, m)?;
        let mut out: Matrix = ExactMatrix::zeros(n * m, self.len());
        for (col, v) in self.elements.iter().enumerate() {
            for (&idx, c) in v {
                let (j, i) = (idx / n, idx % n);
                for (k, jk) in jets[j].iter().enumerate() {
                    if !jk.is_zero() {
                        let r = k * n + i;
                        let cur = out.get(r, col).add_ref(&c.mul_ref(jk));
                        out.set(r, col, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `𝕀_{x0,m}` as a subspace of invariant coordinates.
    pub fn jet_ideal(&self, x0: &SpherePoint, m: usize) -> Result<Subspace<Scalar>> {
        if m == 0 {
            return Ok(Subspace::full(self.len()));
        }
        let jm = self.jet_matrix(x0, m)?;
        Ok(Subspace::span(self.len(), &jm.kernel_basis()))
    }

    /// Ideal of a direct sum of jet representations: kernel of the stacked map.
    pub fn jet_ideal_of_sum(&self, reps: &[(SpherePoint, usize)]) -> Result<Subspace<Scalar>> {
        let mut stacked: Option<Matrix> = None;
        for (x, m) in reps {
            if *m == 0 {
                continue;
            }
            let jm = self.jet_matrix(x, *m)?;
            stacked = Some(match stacked {
                None => jm,
                Some(s) => s.vstack(&jm),
            });
        }
        Ok(match stacked {
            None => Subspace::full(self.len()),
            Some(s) => Subspace::span(self.len(), &s.kernel_basis()),
        })
    }

    /// Codimensions of `𝕀_{x0,m}` for `m = 1..=mmax` with strict-drop flags.
    pub fn ideal_chain(&self, x0: &SpherePoint, mmax: usize) -> Result<Vec<ChainStep>> {
        let (_, chart) = self.action.local_chart(x0)?;
        let full = self.jet_matrix_in(&chart, mmax)?;
        let n = self.action.lie().dim();
        let mut out: Vec<ChainStep> = Vec::new();
        for m in 1..=mmax {
            let sub = ExactMatrix::from_fn(n * m, self.len(), |r, c| full.get(r, c).clone());
            let codim = sub.rank();
            let strict = out.last().map_or(codim > 0, |p| codim > p.codim);
            out.push(ChainStep {
                m,
                codim,
                dim: self.len() - codim,
                strict,
            });
        }
        Ok(out)
    }

    /// Checks `𝕀_{φ⊕ψ} = 𝕀_φ ∩ 𝕀_ψ` for jet representations `φ`, `ψ`.
    pub fn directsum_ideal_intersection_check(
        &self,
        phi: (&SpherePoint, usize),
        psi: (&SpherePoint, usize),
    ) -> Result<bool> {
        let a = self.jet_ideal(phi.0, phi.1)?;
        let b = self.jet_ideal(psi.0, psi.1)?;
        let sum = self.jet_ideal_of_sum(&[(phi.0.clone(), phi.1), (psi.0.clone(), psi.1)])?;
        Ok(sum == a.intersect(&b))
    }

    /// The bracket of two stored elements of total degree at most `D` lies
    /// in the span of elements of degree at most the sum.
    pub fn check_filtration(&self) -> Result<()> {
        let d = self.degree();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let da = self.element_degrees[a] + self.element_degrees[b];
                if da > d {
                    continue;
                }
                let br = self.element(a).bracket(&self.element(b), &self.action)?;
                let v = self.embed(&br)?;
                let k = self.degree_count(da);
                let cols: Vec<Vec<Scalar>> = (0..k).map(|t| self.vector(t)).collect();
                let ok = Subspace::span(self.ambient_dim(), &cols).contains(&v);
                if !ok {
                    return Err(Error::Internal(format!(
                        "bracket of elements {a}, {b} leaves the filtration"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ChainStep {
    pub m: usize,
    pub codim: usize,
    pub dim: usize,
    pub strict: bool,
}
