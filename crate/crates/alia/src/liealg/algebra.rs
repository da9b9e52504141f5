use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactmath::{
    axpy, is_zero_vec, sparse_from_dense, sparse_to_dense, unit_vec, ExactMatrix, Field, SparseEchelon, Subspace,
};
use crate::{Error, Result};

/// A finite-dimensional Lie algebra given by structure constants
/// `[b_i, b_j] = Σ_k c_{ij}^k b_k`.
///
/// Only pairs with `i < j` are stored, so antisymmetry holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct StructLieAlgebra<F> {
    labels: Vec<String>,
    sc: BTreeMap<(usize, usize), Vec<(usize, F)>>,
    grading: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct LieJson {
    dim: usize,
    labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    grading: Option<Vec<i64>>,
    entries: Vec<(usize, usize, usize, String)>,
}

impl<F: Field> StructLieAlgebra<F> {
    /// Build from entries `(i, j, k, c)` meaning `c_{ij}^k = c`. Entries with
    /// `i > j` are folded in by antisymmetry; repeated entries add up.
    pub fn new(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if let Some(g) = &grading {
            if g.len() != dim {
                return Err(Error::DimensionMismatch("grading length".into()));
            }
        }
        let mut dense: BTreeMap<(usize, usize), BTreeMap<usize, F>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!("entry ({i},{j},{k}) out of range")));
            }
            if c.is_zero() {
                continue;
            }
            if i == j {
                return Err(Error::Precondition(format!("[b{i}, b{i}] must vanish")));
            }
            let (key, val) = if i < j { ((i, j), c) } else { ((j, i), c.neg_ref()) };
            let slot = dense.entry(key).or_default().entry(k).or_insert_with(F::zero);
            *slot = slot.add_ref(&val);
        }
        let sc = dense
            .into_iter()
            .map(|(key, row)| (key, row.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, row)| !row.is_empty())
            .collect();
        Ok(StructLieAlgebra { labels, sc, grading })
    }

    /// Build from a bracket on basis indices returning coordinate vectors.
    pub fn from_bracket_fn(
        labels: Vec<String>,
        grading: Option<Vec<i64>>,
        mut f: impl FnMut(usize, usize) -> Vec<F>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for (k, c) in f(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Self::new(labels, entries, grading)
    }

    /// The Lie algebra spanned by the given matrices under the commutator.
    pub fn from_matrices(labels: Vec<String>, basis: &[ExactMatrix<F>]) -> Result<Self> {
        if labels.len() != basis.len() || basis.is_empty() {
            return Err(Error::DimensionMismatch("labels and basis differ in length".into()));
        }
        let coords = MatrixCoordinates::new(basis)?;
        Self::from_bracket_fn(labels, None, |i, j| {
            let c = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
            coords.coordinates(&c).expect("matrix span is closed under commutators")
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Option<Vec<i64>>) -> Self {
        self.grading = grading;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// Nonzero structure constants `(i, j, k, c)` with `i < j`, in order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        self.sc
            .iter()
            .flat_map(|(&(i, j), row)| row.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    /// `[b_i, b_j]` as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        if i == j {
            return out;
        }
        let (key, neg) = if i < j { ((i, j), false) } else { ((j, i), true) };
        if let Some(row) = self.sc.get(&key) {
            for (k, c) in row {
                out[*k] = if neg { c.neg_ref() } else { c.clone() };
            }
        }
        out
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![F::zero(); n];
        let sx: Vec<usize> = (0..n).filter(|&i| !x[i].is_zero()).collect();
        let sy: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
        if sx.len() * sy.len() < self.sc.len() {
            for &i in &sx {
                for &j in &sy {
                    let (key, a) = match i.cmp(&j) {
                        std::cmp::Ordering::Less => ((i, j), x[i].mul_ref(&y[j])),
                        std::cmp::Ordering::Greater => ((j, i), x[i].mul_ref(&y[j]).neg_ref()),
                        std::cmp::Ordering::Equal => continue,
                    };
                    if let Some(row) = self.sc.get(&key) {
                        for (k, c) in row {
                            out[*k] = out[*k].add_ref(&a.mul_ref(c));
                        }
                    }
                }
            }
            return Ok(out);
        }
        for (&(i, j), row) in &self.sc {
            // x_i y_j - x_j y_i
            let a = x[i].mul_ref(&y[j]).sub_ref(&x[j].mul_ref(&y[i]));
            if a.is_zero() {
                continue;
            }
            for (k, c) in row {
                out[*k] = out[*k].add_ref(&a.mul_ref(c));
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad(&self, x: &[F]) -> ExactMatrix<F> {
        let n = self.dim();
        let mut m = ExactMatrix::<F>::zeros(n, n);
        for (&(i, j), row) in &self.sc {
            // [x, b_j] gets x_i c_{ij}; [x, b_i] gets -x_j c_{ij}
            for (k, c) in row {
                if !x[i].is_zero() {
                    let v = m.get(*k, j).add_ref(&x[i].mul_ref(c));
                    m.set(*k, j, v);
                }
                if !x[j].is_zero() {
                    let v = m.get(*k, i).sub_ref(&x[j].mul_ref(c));
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> ExactMatrix<F> {
        self.ad(&unit_vec(self.dim(), i))
    }

    /// Exact Jacobi check over all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let ads: Vec<ExactMatrix<F>> = (0..n).map(|i| self.ad_basis(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                // ad [b_i, b_j] = [ad b_i, ad b_j]
                let lhs = self.ad(&self.bracket_basis(i, j));
                let rhs = ads[i].mul(&ads[j]).sub(&ads[j].mul(&ads[i]));
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "Jacobi identity fails for {} and {}",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Check that brackets respect the grading, if one is present.
    pub fn check_grading(&self) -> Result<()> {
        let Some(g) = &self.grading else { return Ok(()) };
        for (i, j, k, _) in self.entries() {
            if g[k] != g[i] + g[j] {
                return Err(Error::Internal(format!(
                    "[{}, {}] has a component on {} of the wrong degree",
                    self.labels[i], self.labels[j], self.labels[k]
                )));
            }
        }
        Ok(())
    }

    /// Antisymmetry is structural; this re-checks it through the public
    /// bracket so tests can invoke it independently.
    pub fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let a = self.bracket_basis(i, j);
                let b = self.bracket_basis(j, i);
                if a.iter().zip(&b).any(|(x, y)| !x.add_ref(y).is_zero()) {
                    return Err(Error::Internal(format!("antisymmetry fails at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.is_empty()
    }

    /// Killing form `κ(x, y) = tr(ad x ad y)` as a Gram matrix.
    pub fn killing_form(&self) -> ExactMatrix<F> {
        let n = self.dim();
        let ads: Vec<ExactMatrix<F>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = trace_of_product(&ads[i], &ads[j]);
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    /// `[g, g]`.
    pub fn derived_algebra(&self) -> Subspace<F> {
        let vecs: Vec<Vec<F>> = self.sc.keys().map(|&(i, j)| self.bracket_basis(i, j)).collect();
        Subspace::span(self.dim(), &vecs)
    }

    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        let mut stacked = self.ad_basis(0);
        for i in 1..n {
            stacked = stacked.vstack(&self.ad_basis(i));
        }
        Subspace::span(n, &stacked.kernel_basis())
    }

    /// Radical by Cartan's criterion: the Killing-orthogonal complement of
    /// `[g, g]` (characteristic 0).
    pub fn radical(&self) -> Subspace<F> {
        let n = self.dim();
        let d = self.derived_algebra();
        if d.dim() == 0 {
            return Subspace::full(n);
        }
        let k = self.killing_form();
        let rows: Vec<Vec<F>> = d.basis().iter().map(|v| k.mul_vec(v)).collect();
        let m = ExactMatrix::from_rows(rows).expect("uniform rows");
        Subspace::span(n, &m.kernel_basis())
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let ads: Vec<ExactMatrix<F>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut current = s.clone();
        let mut frontier: Vec<Vec<F>> = s.basis().to_vec();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for v in &frontier {
                for ad in &ads {
                    let w = ad.mul_vec(v);
                    if !is_zero_vec(&w) && !current.contains(&w) {
                        current = current.sum(&Subspace::span(n, &[w.clone()]));
                        fresh.push(w);
                    }
                }
            }
            frontier = fresh;
        }
        current
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        (0..self.dim()).all(|i| {
            let ad = self.ad_basis(i);
            s.basis().iter().all(|v| s.contains(&ad.mul_vec(v)))
        })
    }

    /// Span of all brackets of pairs from the bases of `a` and `b`.
    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let same = a == b;
        let mut ech = SparseEchelon::new();
        'outer: for (i, x) in a.basis().iter().enumerate() {
            for y in &b.basis()[if same { i + 1 } else { 0 }..] {
                let z = self.bracket(x, y).expect("dims agree");
                ech.insert(sparse_from_dense(&z));
                if ech.rank() == n {
                    break 'outer;
                }
            }
        }
        let rows: Vec<Vec<F>> = ech.rows().map(|r| sparse_to_dense(r, n)).collect();
        Subspace::span(n, &rows)
    }

    /// Derived series of an ideal, ending at the first repeated term.
    pub fn derived_series(&self, s: &Subspace<F>) -> Result<Vec<Subspace<F>>> {
        if !self.is_ideal(s) {
            return Err(Error::Precondition("derived series requested for a non-ideal".into()));
        }
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = self.bracket_spaces(last, last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn is_solvable_ideal(&self, s: &Subspace<F>) -> Result<bool> {
        Ok(self.derived_series(s)?.last().map_or(true, |t| t.dim() == 0))
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_ideal(&Subspace::full(self.dim()))
            .expect("whole algebra is an ideal")
    }

    /// Structure constants of a subalgebra in the canonical basis of `s`.
    pub fn subalgebra(&self, s: &Subspace<F>, labels: Vec<String>) -> Result<Self> {
        let basis = s.basis().to_vec();
        let mut bad = None;
        let out = Self::from_bracket_fn(labels, None, |i, j| {
            let z = self.bracket(&basis[i], &basis[j]).expect("dims agree");
            match s.coordinates(&z) {
                Some(c) => c,
                None => {
                    bad = Some((i, j));
                    vec![F::zero(); basis.len()]
                }
            }
        })?;
        match bad {
            Some((i, j)) => Err(Error::Precondition(format!("subspace not closed: [v{i}, v{j}]"))),
            None => Ok(out),
        }
    }

    /// Quotient by an ideal. The complement basis consists of the standard
    /// basis vectors off the ideal's pivot columns; labels are those of the
    /// coset representatives.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("quotient by a non-ideal".into()));
        }
        let n = self.dim();
        let pivots = ideal.pivots();
        let reps: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |v: &[F]| -> Vec<F> {
            let mut w = v.to_vec();
            for (row, &p) in ideal.basis().iter().zip(pivots) {
                if !w[p].is_zero() {
                    let c = w[p].neg_ref();
                    axpy(&mut w, &c, row);
                }
            }
            reps.iter().map(|&r| w[r].clone()).collect()
        };
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let grading = self.grading.as_ref().map(|g| reps.iter().map(|&r| g[r]).collect());
        let algebra = Self::from_bracket_fn(labels, grading, |i, j| project(&self.bracket_basis(reps[i], reps[j])))?;
        let projection = ExactMatrix::from_columns(
            &(0..n).map(|c| project(&unit_vec(n, c))).collect::<Vec<_>>(),
            reps.len(),
        );
        Ok(Quotient {
            algebra,
            representatives: reps,
            projection,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = LieJson {
            dim: self.dim(),
            labels: self.labels.clone(),
            grading: self.grading.clone(),
            entries: self.entries().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: LieJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.labels.len() != doc.dim {
            return Err(Error::Parse(format!(
                "dim is {} but {} labels were given",
                doc.dim,
                doc.labels.len()
            )));
        }
        let mut entries = Vec::with_capacity(doc.entries.len());
        for (idx, (i, j, k, s)) in doc.entries.into_iter().enumerate() {
            let c = F::parse_scalar(&s).map_err(|e| Error::Parse(format!("entries[{idx}]: {e}")))?;
            entries.push((i, j, k, c));
        }
        Self::new(doc.labels, entries, doc.grading)
    }

    /// Human-readable table of nonzero brackets.
    pub fn bracket_table(&self) -> String {
        let mut out = String::new();
        for (&(i, j), row) in &self.sc {
            let terms: Vec<String> = row.iter().map(|(k, c)| format!("({c})*{}", self.labels[*k])).collect();
            out.push_str(&format!(
                "[{}, {}] = {}\n",
                self.labels[i],
                self.labels[j],
                terms.join(" + ")
            ));
        }
        out
    }
}

/// `tr(AB)` without forming the product.
fn trace_of_product<F: Field>(a: &ExactMatrix<F>, b: &ExactMatrix<F>) -> F {
    let mut acc = F::zero();
    for k in 0..a.rows() {
        for (l, x) in a.row(k).iter().enumerate() {
            if !x.is_zero() {
                let y = b.get(l, k);
                if !y.is_zero() {
                    acc = acc.add_ref(&x.mul_ref(y));
                }
            }
        }
    }
    acc
}

/// A quotient algebra together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: StructLieAlgebra<F>,
    /// Indices of the basis vectors used as coset representatives.
    pub representatives: Vec<usize>,
    /// Matrix of the projection onto the quotient basis.
    pub projection: ExactMatrix<F>,
}

/// True iff `f` is invertible and `f[x, y]₁ = [f x, f y]₂` on basis pairs.
pub fn verify_isomorphism<F: Field>(
    f: &ExactMatrix<F>,
    g1: &StructLieAlgebra<F>,
    g2: &StructLieAlgebra<F>,
) -> Result<bool> {
    if !f.is_square() || f.rows() != g1.dim() || g2.dim() != g1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map {}x{} between algebras of dims {} and {}",
            f.rows(),
            f.cols(),
            g1.dim(),
            g2.dim()
        )));
    }
    if f.rank() != f.rows() {
        return Ok(false);
    }
    let n = g1.dim();
    let images: Vec<Vec<F>> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.mul_vec(&g1.bracket_basis(i, j));
            let rhs = g2.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Coordinates of matrices with respect to a linearly independent family.
#[derive(Clone, Debug)]
pub struct MatrixCoordinates<F> {
    shape: (usize, usize),
    span: Subspace<F>,
    /// `change[i]` expresses the i-th canonical span vector in the input basis.
    change: ExactMatrix<F>,
}

impl<F: Field> MatrixCoordinates<F> {
    pub fn new(basis: &[ExactMatrix<F>]) -> Result<Self> {
        let shape = (basis[0].rows(), basis[0].cols());
        let flat: Vec<Vec<F>> = basis.iter().map(|m| m.to_rows().concat()).collect();
        let span = Subspace::span(shape.0 * shape.1, &flat);
        if span.dim() != basis.len() {
            return Err(Error::Precondition("matrix basis is linearly dependent".into()));
        }
        // Express canonical vectors through the input basis.
        let cols: Vec<Vec<F>> = flat.iter().map(|v| span.coordinates(v).expect("in span")).collect();
        let to_canon = ExactMatrix::from_columns(&cols, basis.len());
        let change = to_canon
            .inverse()
            .ok_or_else(|| Error::Internal("basis change".into()))?;
        Ok(MatrixCoordinates { shape, span, change })
    }

    pub fn coordinates(&self, m: &ExactMatrix<F>) -> Option<Vec<F>> {
        if (m.rows(), m.cols()) != self.shape {
            return None;
        }
        let c = self.span.coordinates(&m.to_rows().concat())?;
        Some(self.change.mul_vec(&c))
    }
}
